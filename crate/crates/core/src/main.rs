fn main() { std::process::exit(uncertainty::cli::run_cli(std::env::args_os())); }
