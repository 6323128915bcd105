fn main() {
    std::process::exit(trop_hilb::cli::cli_main(std::env::args().skip(1)));
}
