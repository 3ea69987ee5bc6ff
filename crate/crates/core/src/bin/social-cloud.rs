use std::process::ExitCode;

use clap::Parser;
use social_cloud::cli::{run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let mut stdout = std::io::stdout().lock();
    match run(config, &mut stdout) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
