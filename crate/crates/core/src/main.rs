fn main() {
    let code = torus_git::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
