fn main() -> std::process::ExitCode {
    hkrate::cli::main()
}
