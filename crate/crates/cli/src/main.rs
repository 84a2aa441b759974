use clap::Parser;

fn main() {
    let cli = knotinv::Cli::parse();
    let outcome = knotinv::run(&cli);
    print!("{}", outcome.report);
    if let Some(e) = &outcome.error {
        eprintln!("error: {e}");
    }
    std::process::exit(outcome.status);
}
