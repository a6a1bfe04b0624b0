use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = match loopmech::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                loopmech::error::exit::CONFIG_ERROR
            } else {
                0
            });
        }
    };
    ExitCode::from(loopmech::run(cli))
}
