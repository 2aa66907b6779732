fn main() {
    std::process::exit(levikit::cli::run(std::env::args_os()));
}
