fn main() {
    std::process::exit(lambda_umbral::cli::main_with_env());
}
