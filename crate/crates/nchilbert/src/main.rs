use std::io::{stderr, stdout};
use std::process::exit;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = nchilbert::cli::run(&args, &mut stdout().lock(), &mut stderr().lock());
    exit(code);
}
