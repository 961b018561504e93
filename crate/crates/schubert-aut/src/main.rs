fn main() {
    std::process::exit(schubert_aut::cli::run());
}
