fn main() -> std::process::ExitCode {
    xint_cli::main_exit()
}
