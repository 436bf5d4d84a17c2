fn main() {
    std::process::exit(spectramin::cli::main());
}
