use std::process::ExitCode;

use clap::Parser;
use oppsched::cli::{run, Cli, ExperimentSpec};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = ExperimentSpec::from_cli(cli).and_then(|spec| {
        let summary = run(&spec)?;
        if spec.out.is_some() {
            println!("{summary}");
        } else {
            eprintln!("{summary}");
        }
        Ok(())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("oppsched: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
