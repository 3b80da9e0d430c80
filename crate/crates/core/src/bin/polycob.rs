fn main() {
    std::process::exit(polycob::cli::run(std::env::args().collect()));
}
