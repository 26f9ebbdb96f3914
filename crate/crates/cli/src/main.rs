fn main() {
    std::process::exit(parascale_cli::run(std::env::args_os()));
}
