//! Command-line front end. Results go to the writer passed to [`run`];
//! diagnostics are returned as errors for the caller to print.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::embedding::{cnd_check, distance_matrix, wall_coordinates, SampleSet};
use crate::groups::{LampGroup, WreathElement, MAX_RANK};
use crate::syntax::parse_element;
use crate::walls::WallSpace;
use crate::wreath_walls::{brute_force_separating, growth_table, oracle_radius, properness_check, WreathWalls};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] crate::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },

    #[error("{path}:{line}: {source}")]
    Sample { path: PathBuf, line: usize, source: crate::Error },

    #[error("{0}")]
    Usage(String),

    #[error("output: {0}")]
    Output(#[from] io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// How a successful run ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A checked property failed; the message says which.
    Violation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "wreathwalls", version, about = "Wall distance on lamplighter groups over free groups")]
pub struct Cli {
    /// Rank of the free group.
    #[arg(long, global = true, default_value_t = 2)]
    pub rank: usize,

    /// Use the cyclic lamp group Z/k.
    #[arg(long, global = true, conflicts_with = "lamp_table")]
    pub lamp_order: Option<usize>,

    /// Read the lamp group from a multiplication table file.
    #[arg(long, global = true)]
    pub lamp_table: Option<PathBuf>,

    /// Refuse enumerations larger than this.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_CAP)]
    pub cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two elements.
    Mul { a: String, b: String },
    /// Invert an element.
    Inv { a: String },
    /// Wall distance between two elements.
    Dist {
        a: String,
        b: String,
        /// Cross-check against brute-force wall enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// List the walls separating two elements.
    Walls { a: String, b: String },
    /// Check that every element within wall distance N has position and
    /// lamps in the base ball of radius N.
    Proper {
        #[arg(long)]
        max_wall: usize,
        #[arg(long)]
        radius: usize,
    },
    /// Sphere sizes and wall-distance range per box radius.
    Growth {
        #[arg(long)]
        radius: usize,
    },
    /// Conditional negative definiteness of the sample's distance matrix.
    Cnd {
        #[arg(long)]
        sample: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Write 0/1 wall coordinates of a sample and check the isometry.
    Embed {
        #[arg(long)]
        sample: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Validated global settings.
#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub rank: usize,
    pub lamps: LampGroup,
    pub cap: u64,
    pub format: Format,
}

impl SessionConfig {
    pub fn from_cli(cli: &Cli) -> CliResult<Self> {
        if cli.rank == 0 || cli.rank > MAX_RANK {
            return Err(CliError::Usage(format!("--rank must be between 1 and {MAX_RANK}")));
        }
        if cli.cap == 0 {
            return Err(CliError::Usage("--cap must be at least 1".into()));
        }
        let lamps = match (&cli.lamp_table, cli.lamp_order) {
            (Some(path), _) => LampGroup::parse_table(&read(path)?)?,
            (None, Some(k)) => LampGroup::cyclic(k)?,
            (None, None) => LampGroup::cyclic(2)?,
        };
        Ok(SessionConfig { rank: cli.rank, lamps, cap: cli.cap, format: cli.format })
    }

    pub fn walls(&self) -> CliResult<WreathWalls> {
        Ok(WreathWalls::over_free(self.rank, self.lamps.clone())?)
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Parse a sample file: one element per line, `#` starts a comment.
pub fn parse_sample(text: &str, path: &Path, ww: &WreathWalls) -> CliResult<SampleSet<WreathElement>> {
    let mut elements = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let x = parse_element(body, ww.product())
            .map_err(|source| CliError::Sample { path: path.to_owned(), line: i + 1, source })?;
        elements.push(x);
    }
    Ok(SampleSet::new(elements)?)
}

fn print_json<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out)
}

fn element(s: &str, ww: &WreathWalls) -> CliResult<WreathElement> {
    Ok(parse_element(s, ww.product())?)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<Outcome> {
    let cfg = SessionConfig::from_cli(cli)?;
    let ww = cfg.walls()?;
    match &cli.command {
        Command::Mul { a, b } => {
            let x = ww.product().mul(&element(a, &ww)?, &element(b, &ww)?);
            emit_element(out, cfg.format, &x)?;
        }
        Command::Inv { a } => {
            let x = ww.product().inverse(&element(a, &ww)?);
            emit_element(out, cfg.format, &x)?;
        }
        Command::Dist { a, b, oracle } => return dist(out, &cfg, &ww, a, b, *oracle),
        Command::Walls { a, b } => walls(out, cfg.format, &ww, a, b)?,
        Command::Proper { max_wall, radius } => {
            let report = properness_check(&ww, *max_wall, *radius, cfg.cap)?;
            match cfg.format {
                Format::Json => {
                    let mut value = serde_json::to_value(&report)?;
                    value["claim_holds"] = json!(report.claim_holds());
                    value["within_bound"] = json!(report.within_bound());
                    print_json(out, &value)?;
                }
                Format::Csv => {
                    let mut w = csv_writer(out);
                    w.write_record(["element", "wall_distance"])?;
                    for e in &report.within {
                        w.write_record([e.element.clone(), e.wall_distance.to_string()])?;
                    }
                    w.flush()?;
                }
                Format::Text => {
                    writeln!(out, "max_wall {} radius {}", report.max_wall, report.radius)?;
                    writeln!(out, "enumerated {}", report.enumerated)?;
                    writeln!(out, "base_ball_size {}", report.base_ball_size)?;
                    let bound = report.bound.map_or_else(|| "overflow".to_string(), |b| b.to_string());
                    writeln!(out, "within {} bound {}", report.within.len(), bound)?;
                    writeln!(out, "claim_holds {}", report.claim_holds())?;
                    for e in &report.within {
                        writeln!(out, "{}\t{}", e.element, e.wall_distance)?;
                    }
                    for v in &report.violations {
                        writeln!(out, "violation\t{v}")?;
                    }
                }
            }
            if !report.claim_holds() {
                return Ok(Outcome::Violation(format!(
                    "{} elements within wall distance {} leave the base ball",
                    report.violations.len(),
                    max_wall
                )));
            }
            if !report.within_bound() {
                return Ok(Outcome::Violation("element count exceeds the box bound".into()));
            }
        }
        Command::Growth { radius } => {
            let rows = growth_table(&ww, *radius, cfg.cap)?;
            match cfg.format {
                Format::Json => print_json(out, &rows)?,
                Format::Csv => {
                    let mut w = csv_writer(out);
                    for row in &rows {
                        w.serialize(row)?;
                    }
                    w.flush()?;
                }
                Format::Text => {
                    writeln!(out, "radius\tsphere_size\tmin_wall\tmax_wall")?;
                    for r in &rows {
                        writeln!(out, "{}\t{}\t{}\t{}", r.radius, r.sphere_size, r.min_wall, r.max_wall)?;
                    }
                }
            }
        }
        Command::Cnd { sample, tol } => {
            let s = parse_sample(&read(sample)?, sample, &ww)?;
            let d = distance_matrix(&ww, &s);
            let coords = wall_coordinates(&ww, &s);
            let report = cnd_check(&d, *tol)?;
            match cfg.format {
                Format::Json => print_json(
                    out,
                    &json!({
                        "pass": report.pass,
                        "min_eigenvalue": report.min_eigenvalue,
                        "dimension": report.dimension,
                        "wall_count": coords.walls.len(),
                    }),
                )?,
                Format::Csv => {
                    let labels: Vec<String> = s.elements().iter().map(ToString::to_string).collect();
                    d.write_csv(&labels, &mut *out)?;
                }
                Format::Text => {
                    writeln!(out, "pass {}", report.pass)?;
                    writeln!(out, "min_eigenvalue {:e}", report.min_eigenvalue)?;
                    writeln!(out, "dimension {}", report.dimension)?;
                    writeln!(out, "wall_count {}", coords.walls.len())?;
                }
            }
            if !report.pass {
                return Ok(Outcome::Violation(format!(
                    "min eigenvalue {:e} below -{:e}",
                    report.min_eigenvalue, report.effective_tolerance
                )));
            }
        }
        Command::Embed { sample, out: dir } => return embed(out, cfg.format, &ww, sample, dir),
    }
    Ok(Outcome::Pass)
}

fn emit_element(out: &mut dyn Write, format: Format, x: &WreathElement) -> CliResult<()> {
    match format {
        Format::Json => print_json(out, &json!({ "result": x.to_string() })),
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["result"])?;
            w.write_record([x.to_string()])?;
            w.flush()?;
            Ok(())
        }
        Format::Text => Ok(writeln!(out, "{x}")?),
    }
}

fn dist(out: &mut dyn Write, cfg: &SessionConfig, ww: &WreathWalls, a: &str, b: &str, oracle: bool) -> CliResult<Outcome> {
    let x = element(a, ww)?;
    let y = element(b, ww)?;
    let forward = ww.separating_walls_directed(&x, &y).len();
    let backward = ww.separating_walls_directed(&y, &x).len();
    let distance = forward + backward;
    let agree = if oracle {
        let brute = brute_force_separating(ww, &x, &y, oracle_radius(&x, &y), cfg.cap)?;
        Some(brute == ww.separating_walls(&x, &y))
    } else {
        None
    };
    match cfg.format {
        Format::Json => print_json(
            out,
            &json!({ "distance": distance, "forward": forward, "backward": backward, "oracle_agrees": agree }),
        )?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["distance", "forward", "backward", "oracle_agrees"])?;
            let agree = agree.map_or_else(String::new, |a| a.to_string());
            w.write_record([distance.to_string(), forward.to_string(), backward.to_string(), agree])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{distance}")?;
            if let Some(a) = agree {
                writeln!(out, "oracle {}", if a { "agrees" } else { "DISAGREES" })?;
            }
        }
    }
    Ok(match agree {
        Some(false) => Outcome::Violation("brute-force wall enumeration disagrees".into()),
        _ => Outcome::Pass,
    })
}

fn walls(out: &mut dyn Write, format: Format, ww: &WreathWalls, a: &str, b: &str) -> CliResult<()> {
    let x = element(a, ww)?;
    let y = element(b, ww)?;
    let forward = ww.separating_walls_directed(&x, &y);
    let backward = ww.separating_walls_directed(&y, &x);
    match format {
        Format::Json => print_json(out, &json!({ "forward": forward, "backward": backward }))?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["direction", "wall"])?;
            for wall in &forward {
                w.write_record(["forward".to_string(), wall.to_string()])?;
            }
            for wall in &backward {
                w.write_record(["backward".to_string(), wall.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            for wall in &forward {
                writeln!(out, "forward\t{wall}")?;
            }
            for wall in &backward {
                writeln!(out, "backward\t{wall}")?;
            }
        }
    }
    Ok(())
}

fn embed(out: &mut dyn Write, format: Format, ww: &WreathWalls, sample: &Path, dir: &Path) -> CliResult<Outcome> {
    let s = parse_sample(&read(sample)?, sample, ww)?;
    let coords = wall_coordinates(ww, &s);
    let d = distance_matrix(ww, &s);
    let mismatches: Vec<(usize, usize)> = (0..s.len())
        .flat_map(|i| (0..s.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| coords.hamming(i, j) as i64 != d.get(i, j))
        .collect();

    let io_err = |path: PathBuf| move |source| CliError::Io { path, source };
    fs::create_dir_all(dir).map_err(io_err(dir.to_owned()))?;
    let labels: Vec<String> = s.elements().iter().map(ToString::to_string).collect();
    let coord_path = dir.join("coordinates.csv");
    let file = fs::File::create(&coord_path).map_err(io_err(coord_path.clone()))?;
    coords.write_csv(&labels, file)?;
    let dist_path = dir.join("distances.csv");
    let file = fs::File::create(&dist_path).map_err(io_err(dist_path.clone()))?;
    d.write_csv(&labels, file)?;
    let walls_path = dir.join("walls.json");
    let mut file = fs::File::create(&walls_path).map_err(io_err(walls_path.clone()))?;
    serde_json::to_writer_pretty(&mut file, &coords.walls)?;
    writeln!(file).map_err(io_err(walls_path))?;

    let isometry = mismatches.is_empty();
    match format {
        Format::Json => print_json(
            out,
            &json!({ "isometry": isometry, "dimension": s.len(), "wall_count": coords.walls.len() }),
        )?,
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["isometry", "dimension", "wall_count"])?;
            w.write_record([isometry.to_string(), s.len().to_string(), coords.walls.len().to_string()])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "isometry {isometry}")?;
            writeln!(out, "dimension {}", s.len())?;
            writeln!(out, "wall_count {}", coords.walls.len())?;
        }
    }
    Ok(match mismatches.first() {
        Some((i, j)) => Outcome::Violation(format!("hamming distance differs from wall distance at ({i}, {j})")),
        None => Outcome::Pass,
    })
}
