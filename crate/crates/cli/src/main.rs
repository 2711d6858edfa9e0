use std::process::ExitCode;

use clap::Parser;
use hopfcyc_cli::{is_identity_error, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = cli.job();
    match run(&job) {
        Ok(outcome) => {
            print!("{}", outcome.render());
            if let Some(path) = &job.output {
                let text = serde_json::to_string_pretty(&outcome).expect("outcome serializes");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_identity_error(&e) { 1 } else { 2 })
        }
    }
}
