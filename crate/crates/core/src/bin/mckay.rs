fn main() {
    std::process::exit(mckay::cli::cli_main(std::env::args_os()));
}
