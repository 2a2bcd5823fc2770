fn main() {
    std::process::exit(az_core::cli::main());
}
