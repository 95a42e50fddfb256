fn main() {
    std::process::exit(diagconj::cli::run(std::env::args()))
}
