fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(macdual::cli::run(&args, &mut std::io::stdout()));
}
