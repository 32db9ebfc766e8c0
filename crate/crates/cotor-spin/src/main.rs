use std::process::ExitCode;

fn main() -> ExitCode {
    cotor_spin::cli::main_entry()
}
