use std::io::{self, BufReader};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let mut input = BufReader::new(io::stdin());
    let code = pancyclic_cli::run(&argv, &mut input, &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
