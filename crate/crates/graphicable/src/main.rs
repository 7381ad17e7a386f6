fn main() {
    std::process::exit(graphicable::cli::run());
}
