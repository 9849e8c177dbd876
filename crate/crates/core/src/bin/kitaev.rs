fn main() {
    std::process::exit(nhkitaev::cli::main_with_args(std::env::args_os()));
}
