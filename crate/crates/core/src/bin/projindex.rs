fn main() {
    std::process::exit(projindex::cli::run(std::env::args_os()));
}
