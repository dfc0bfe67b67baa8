use std::process::ExitCode;

fn main() -> anyhow::Result<ExitCode> {
    let code = bigraded_lc::cli::main_with_args(std::env::args_os());
    Ok(ExitCode::from(u8::try_from(code)?))
}
