fn main() {
    std::process::exit(multitile_cli::main_impl());
}
