fn main() -> std::process::ExitCode {
    desitter_cli::main_exit()
}
