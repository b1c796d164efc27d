fn main() {
    std::process::exit(ordfor::cli::run(std::env::args_os()));
}
