fn main() {
    std::process::exit(qspectra::cli::run(std::env::args_os()));
}
