fn main() {
    std::process::exit(tucker_volume::cli::run(std::env::args_os()));
}
