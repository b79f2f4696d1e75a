fn main() {
    std::process::exit(classical_chars::cli::main());
}
