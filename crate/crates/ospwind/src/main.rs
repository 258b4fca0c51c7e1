fn main() {
    std::process::exit(ospwind::cli::run(std::env::args_os()));
}
