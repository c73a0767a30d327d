fn main() {
    std::process::exit(paley_square::cli::run(std::env::args_os()));
}
