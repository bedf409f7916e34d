fn main() {
    std::process::exit(compactum::cli::run(std::env::args_os()));
}
