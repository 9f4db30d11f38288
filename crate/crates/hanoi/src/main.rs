use std::process::ExitCode;

fn main() -> ExitCode {
    hanoi::cli::run(std::env::args_os())
}
