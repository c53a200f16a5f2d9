fn main() {
    std::process::exit(unimap::cli::run(std::env::args_os()));
}
