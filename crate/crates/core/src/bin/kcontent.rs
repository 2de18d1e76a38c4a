fn main() {
    std::process::exit(kcontent::cli::main());
}
