use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(polygenocchi::cli::run(std::env::args()))
}
