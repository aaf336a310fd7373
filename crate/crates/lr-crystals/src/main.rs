use std::process::ExitCode;

fn main() -> ExitCode {
    lr_crystals::cli::run(std::env::args_os())
}
