fn main() {
    std::process::exit(kneser::cli::main_with_args(std::env::args_os()));
}
