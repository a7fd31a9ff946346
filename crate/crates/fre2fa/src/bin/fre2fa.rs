use std::process::ExitCode;

fn main() -> ExitCode {
    fre2fa::cli::main()
}
