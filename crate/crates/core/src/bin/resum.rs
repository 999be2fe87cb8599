fn main() {
    std::process::exit(resum::cli::main_with_args(std::env::args_os()));
}
