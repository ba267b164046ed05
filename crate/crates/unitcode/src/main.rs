fn main() {
    std::process::exit(unitcode::cli::run() as i32);
}
