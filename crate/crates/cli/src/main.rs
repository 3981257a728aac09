use std::io::{stderr, stdout};
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = hg2_cli::run_cli(std::env::args_os(), &mut stdout().lock(), &mut stderr().lock());
    ExitCode::from(code as u8)
}
