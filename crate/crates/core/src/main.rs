fn main() {
    std::process::exit(sectorial::cli::run());
}
