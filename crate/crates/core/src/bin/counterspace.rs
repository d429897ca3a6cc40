use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_format = std::env::var("COUNTERSPACE_FORMAT").ok();
    let code = counterspace::cli::run(
        std::env::args_os(),
        env_format.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
