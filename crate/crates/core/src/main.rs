use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use wreathwalls::cli::{run, Cli, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Violation(msg)) => {
            eprintln!("property violation: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };
    let _ = out.flush();
    code
}
