fn main() {
    std::process::exit(supercong_cli::run(std::env::args_os()));
}
