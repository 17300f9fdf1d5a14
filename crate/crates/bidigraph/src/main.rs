fn main() {
    std::process::exit(bidigraph::cli::cli_main(std::env::args_os().collect()));
}
