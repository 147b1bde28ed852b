use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let status = detours::cli::run(
        std::env::args_os(),
        &mut input,
        &mut io::stdout(),
        &mut io::stderr(),
    );
    ExitCode::from(status as u8)
}
