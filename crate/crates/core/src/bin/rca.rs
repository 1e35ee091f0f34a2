fn main() -> std::process::ExitCode {
    rca::cli::run(std::env::args_os())
}
