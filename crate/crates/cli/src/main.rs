use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = cyclic_covers_cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    // A closed pipe leaves nothing useful to report.
    let _ = stdout.write_all(out.stdout.as_bytes());
    ExitCode::from(out.code as u8)
}
