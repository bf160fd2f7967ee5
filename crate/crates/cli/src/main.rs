fn main() {
    std::process::exit(nearzero_cli::main_with(std::env::args_os()));
}
