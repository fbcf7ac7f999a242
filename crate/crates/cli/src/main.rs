use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod error;
mod run;

use args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run::run_command(cli.command, &cli.options).and_then(|out| Ok((out.render(cli.options.format)?, out.failed())));
    match result {
        Ok((text, failed)) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(text.as_bytes());
            let _ = stdout.flush();
            if failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
