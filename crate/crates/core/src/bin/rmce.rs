use std::process::ExitCode;

fn main() -> ExitCode {
    rmce::cli::main_with_args(std::env::args_os())
}
