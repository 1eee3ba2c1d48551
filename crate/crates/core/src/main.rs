fn main() -> std::process::ExitCode {
    incidence::cli::main()
}
