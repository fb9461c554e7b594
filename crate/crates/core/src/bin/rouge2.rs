fn main() {
    std::process::exit(rouge2::cli::run(std::env::args_os()));
}
