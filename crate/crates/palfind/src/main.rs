fn main() {
    std::process::exit(palfind::cli::main_with(std::env::args_os()));
}
