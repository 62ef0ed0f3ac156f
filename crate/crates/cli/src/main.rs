use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use so3_verlinde_cli::{resolve_output, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.kind().to_string());
            let _ = e.print();
            eprintln!("{}", err.record());
            return ExitCode::from(err.exit_code());
        }
    };
    let outcome = run(&cli.command).and_then(|emitted| {
        match &cli.output {
            Some(path) => {
                let path = resolve_output(path);
                if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir).map_err(|e| CliError::Failure(format!("{}: {e}", dir.display())))?;
                }
                std::fs::write(&path, &emitted.body)
                    .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
            }
            None => {
                let _ = std::io::stdout().write_all(emitted.body.as_bytes());
            }
        }
        Ok(emitted.passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("{}", CliError::Failure("one or more checks failed".into()).record());
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("{}", err.record());
            ExitCode::from(err.exit_code())
        }
    }
}
