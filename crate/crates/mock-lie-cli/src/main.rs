use std::io::{self, Write};
use std::process;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = mock_lie_cli::run(&args, &mut out, &mut err);
    let _ = out.flush();
    let _ = err.flush();
    process::exit(code);
}
