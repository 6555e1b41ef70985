fn main() {
    std::process::exit(recipbinom::cli::run(std::env::args_os()));
}
