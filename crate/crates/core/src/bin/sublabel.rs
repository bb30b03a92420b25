use std::io;
use std::process::ExitCode;

use sublabel::cli::{run, Io};

fn main() -> ExitCode {
    let mut stdin = io::stdin().lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let mut io = Io {
        stdin: &mut stdin,
        stdout: &mut stdout,
        stderr: &mut stderr,
    };
    let code = run(std::env::args_os(), &mut io);
    ExitCode::from(code as u8)
}
