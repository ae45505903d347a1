fn main() {
    std::process::exit(zdg::cli::run(std::env::args_os()));
}
