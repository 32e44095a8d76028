use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = hecke_centre::cli::run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(out.code as u8)
}
