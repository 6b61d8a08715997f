use std::process::ExitCode;

fn main() -> ExitCode {
    rindler_sdc::cli::run(std::env::args_os())
}
