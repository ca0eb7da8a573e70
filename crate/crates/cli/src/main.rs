use std::process::ExitCode;

use clap::Parser;
use rimhook_cli::{run, Cli, Format};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match cli.format {
                Format::Json => println!("{}", f.to_json()),
                Format::Text => eprintln!("error: {}", f.message),
            }
            ExitCode::from(1)
        }
    }
}
