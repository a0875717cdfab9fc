use std::process::ExitCode;

use clap::Parser;
use raysearch::commands::execute;
use raysearch::SweepConfig;

fn main() -> ExitCode {
    let config = SweepConfig::parse();
    match execute(&config) {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("raysearch: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
