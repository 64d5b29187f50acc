fn main() {
    std::process::exit(ver4::cli::run(std::env::args_os()));
}
