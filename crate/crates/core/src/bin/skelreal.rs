use clap::Parser;
use skelreal::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = execute(&cli.command);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
