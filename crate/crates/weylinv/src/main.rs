fn main() {
    std::process::exit(weylinv::cli::main_with_args(std::env::args_os()));
}
