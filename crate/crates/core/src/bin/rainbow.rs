fn main() {
    env_logger::init();
    std::process::exit(locally_rainbow::cli::run(std::env::args_os()));
}
