fn main() {
    let (code, out) = equivar::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
