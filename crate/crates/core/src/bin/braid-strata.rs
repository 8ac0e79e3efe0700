fn main() {
    std::process::exit(braid_strata::cli::main());
}
