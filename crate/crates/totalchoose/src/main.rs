fn main() {
    std::process::exit(totalchoose::cli::run(std::env::args_os()));
}
