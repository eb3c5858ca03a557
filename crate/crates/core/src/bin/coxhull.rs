fn main() {
    std::process::exit(coxhull::commands::run(std::env::args_os()));
}
