fn main() {
    std::process::exit(hurwitz_lerch::cli::run(std::env::args_os()));
}
