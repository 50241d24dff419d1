use std::process::ExitCode;

fn main() -> ExitCode {
    hyperquad::cli::main_entry(std::env::args_os())
}
