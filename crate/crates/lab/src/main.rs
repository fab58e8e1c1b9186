use std::io::{self, Write};

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::BufWriter::new(io::stdout().lock());
    let mut err = io::stderr();
    let code = mhc_lab::cli::run(std::env::args_os(), &mut input, &mut out, &mut err);
    if out.flush().is_err() && code == 0 {
        std::process::exit(mhc_lab::cli::EXIT_INPUT);
    }
    std::process::exit(code);
}
