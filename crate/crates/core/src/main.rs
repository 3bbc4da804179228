fn main() -> std::process::ExitCode {
    powersumkit::cli::main()
}
