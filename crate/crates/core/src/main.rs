fn main() {
    std::process::exit(multiloop::cli::run());
}
