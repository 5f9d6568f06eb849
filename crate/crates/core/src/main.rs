fn main() {
    std::process::exit(polymove::cli::main_with_args(std::env::args_os()));
}
