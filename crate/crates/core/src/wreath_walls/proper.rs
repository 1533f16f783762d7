//! Exhaustive enumeration of boxes in `H ≀ F_n` and the properness check:
//! an element within wall distance `N` of the identity has its position and
//! every lamp inside the base ball `B(N) = {g : w(1, g) <= N}`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::WreathWalls;
use crate::error::{Error, Result};
use crate::groups::{DiscreteGroup, LampConfig, LampElement, ReducedWord, WreathElement};
use crate::walls::{GroupWallSpace, WallSpace};

/// Number of elements whose position and lamps all lie in the ball of
/// `radius`: `|H|^|B| · |B|`. `None` on overflow.
pub fn box_size(ww: &WreathWalls, radius: usize) -> Option<u128> {
    let ball = ww.space().group().ball_size(radius)?;
    configs_over(ww.lamps().order(), ball)?.checked_mul(ball)
}

fn configs_over(order: usize, positions: u128) -> Option<u128> {
    (order as u128).checked_pow(u32::try_from(positions).ok()?)
}

/// Largest word length among the position and the lamp positions.
pub fn box_radius(x: &WreathElement) -> usize {
    std::iter::once(x.position())
        .chain(x.lamps().support())
        .map(ReducedWord::len)
        .max()
        .unwrap_or(0)
}

/// Every element with position and support in the ball of `radius`,
/// ordered by position (shortlex), then configuration.
pub fn enumerate_box(ww: &WreathWalls, radius: usize, cap: u64) -> Result<Vec<WreathElement>> {
    let predicted = box_size(ww, radius);
    if predicted.is_none_or(|n| n > cap as u128) {
        return Err(Error::CapExceeded {
            predicted: predicted.map_or_else(|| "overflow".into(), |n| n.to_string()),
            cap,
        });
    }
    let ball = ww.space().group().ball(radius, cap)?;
    let order = ww.lamps().order() as u32;
    let mut configs = Vec::new();
    let mut digits = vec![0u32; ball.len()];
    loop {
        let entries = ball
            .iter()
            .zip(&digits)
            .filter(|(_, &d)| d != 0)
            .map(|(p, &d)| (p.clone(), LampElement(d)));
        configs.push(LampConfig::from_entries(entries)?);
        let Some(i) = digits.iter().position(|&d| d + 1 < order) else {
            break;
        };
        digits[i] += 1;
        digits[..i].iter_mut().for_each(|d| *d = 0);
    }
    Ok(ball
        .iter()
        .flat_map(|g| configs.iter().map(|c| WreathElement::new(c.clone(), g.clone())))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WithinEntry {
    pub element: String,
    pub wall_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProperReport {
    pub max_wall: usize,
    pub radius: usize,
    pub enumerated: usize,
    /// `|B(N)|`.
    pub base_ball_size: usize,
    /// `|H|^|B(N)| · |B(N)|`, or `None` if it overflows.
    pub bound: Option<u128>,
    /// Elements with wall distance at most `max_wall`, in canonical order.
    pub within: Vec<WithinEntry>,
    /// Elements within `max_wall` whose position or lamps leave `B(N)`.
    pub violations: Vec<String>,
}

impl ProperReport {
    pub fn claim_holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn within_bound(&self) -> bool {
        self.bound.is_none_or(|b| (self.within.len() as u128) <= b)
    }

    pub fn passed(&self) -> bool {
        self.claim_holds() && self.within_bound()
    }
}

/// Enumerate the box of `radius` (which must be at least `max_wall`) and
/// check every element within wall distance `max_wall` of the identity.
pub fn properness_check(ww: &WreathWalls, max_wall: usize, radius: usize, cap: u64) -> Result<ProperReport> {
    if radius < max_wall {
        return Err(Error::RadiusTooSmall { radius, max_wall });
    }
    let elements = enumerate_box(ww, radius, cap)?;
    let tree = ww.space();
    let one = tree.group().identity();
    let base_ball: BTreeSet<ReducedWord> = tree
        .group()
        .ball(radius, cap)?
        .into_iter()
        .filter(|g| tree.wall_distance(&one, g) <= max_wall)
        .collect();

    let identity = ww.identity();
    let mut within = Vec::new();
    let mut violations = Vec::new();
    for x in &elements {
        let d = ww.wall_distance(&identity, x);
        if d > max_wall {
            continue;
        }
        let inside = base_ball.contains(x.position()) && x.lamps().support().all(|p| base_ball.contains(p));
        if !inside {
            violations.push(x.clone());
        }
        within.push((x.clone(), d));
    }
    within.sort();
    violations.sort();

    let b = base_ball.len() as u128;
    let bound = configs_over(ww.lamps().order(), b).and_then(|c| c.checked_mul(b));
    Ok(ProperReport {
        max_wall,
        radius,
        enumerated: elements.len(),
        base_ball_size: base_ball.len(),
        bound,
        within: within
            .into_iter()
            .map(|(x, d)| WithinEntry { element: x.to_string(), wall_distance: d })
            .collect(),
        violations: violations.iter().map(ToString::to_string).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub radius: usize,
    pub sphere_size: usize,
    pub min_wall: usize,
    pub max_wall: usize,
}

/// For each `r <= radius`, the elements with [`box_radius`] exactly `r` and
/// the range of their wall distance to the identity.
pub fn growth_table(ww: &WreathWalls, radius: usize, cap: u64) -> Result<Vec<GrowthRow>> {
    let identity = ww.identity();
    let mut rows: Vec<Option<GrowthRow>> = vec![None; radius + 1];
    for x in enumerate_box(ww, radius, cap)? {
        let r = box_radius(&x);
        let d = ww.wall_distance(&identity, &x);
        let row = rows[r].get_or_insert(GrowthRow { radius: r, sphere_size: 0, min_wall: d, max_wall: d });
        row.sphere_size += 1;
        row.min_wall = row.min_wall.min(d);
        row.max_wall = row.max_wall.max(d);
    }
    Ok(rows.into_iter().flatten().collect())
}
