use std::process::ExitCode;

fn main() -> ExitCode {
    altsign::cli::run(std::env::args_os())
}
