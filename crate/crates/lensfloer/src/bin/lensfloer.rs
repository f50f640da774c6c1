fn main() {
    std::process::exit(lensfloer::cli::main_entry());
}
