fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = xop::cli::run(std::env::args_os(), |k| std::env::var(k).ok(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
