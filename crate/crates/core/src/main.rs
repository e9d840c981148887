fn main() {
    std::process::exit(hopf_trees::cli::run(std::env::args_os()));
}
