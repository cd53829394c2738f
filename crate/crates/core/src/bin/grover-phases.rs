use std::io;

fn main() {
    let code = grover_phases::cli::run_with(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
