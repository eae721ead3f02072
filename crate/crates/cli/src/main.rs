use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hurwitz::{run, Cli, Context, Threaded};
use hurwitz_core::Precision;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.precision == 0 {
        eprintln!("error: --precision must be positive");
        return ExitCode::from(2);
    }
    let exec = Threaded::new(cli.threads);
    let ctx = Context {
        precision: Precision::new(cli.precision),
        exec: &exec,
    };
    match run(&cli.command, &ctx) {
        Ok(cert) => {
            let text = if cli.json {
                cert.to_json_string() + "\n"
            } else {
                cert.to_text()
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            for c in cert.failures() {
                eprintln!("check failed: {} ({})", c.name, c.witness);
            }
            if cert.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
