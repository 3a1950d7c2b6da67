fn main() {
    std::process::exit(conceptual_ds::cli::run(std::env::args_os()));
}
