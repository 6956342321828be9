fn main() {
    std::process::exit(lincoh::cli::main_exit_code());
}
