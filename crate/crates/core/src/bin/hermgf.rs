use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = hermgf::cli::run_from(std::env::args_os());
    print!("{}", outcome.stdout);
    let _ = std::io::stdout().flush();
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
        if !outcome.stderr.ends_with('\n') {
            eprintln!();
        }
    }
    ExitCode::from(outcome.code as u8)
}
