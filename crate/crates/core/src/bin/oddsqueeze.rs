use std::process::ExitCode;

use oddsqueeze::cli::{parse_cli, run_suite, CliExit};
use oddsqueeze::report::emit_report;
use oddsqueeze::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    let config = match parse_cli(std::env::args_os().skip(1)) {
        Ok(c) => c,
        Err(CliExit::Info(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(CliExit::Usage(text)) => {
            eprint!("{text}");
            if !text.ends_with('\n') {
                eprintln!();
            }
            return ExitCode::from(EXIT_USAGE);
        }
    };

    let doc = match run_suite(&config) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };

    if let Err(e) = emit_report(&doc, config.format, config.output_path.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(match e {
            Error::Io(_) => EXIT_IO,
            _ => EXIT_FAILED,
        });
    }

    let s = doc.summary();
    eprintln!("{} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped);
    if s.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}
