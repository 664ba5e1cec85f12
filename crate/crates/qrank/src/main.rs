use clap::Parser;

fn main() {
    let cli = qrank::Cli::parse();
    if let Err(err) = qrank::run(cli) {
        eprintln!("error: {}", err.message());
        std::process::exit(err.exit_code());
    }
}
