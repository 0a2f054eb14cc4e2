use clap::Parser;
use ringvac::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("ringvac: {e}");
            std::process::exit(2);
        }
    }
}
