fn main() {
    match cockcroft_cli::execute(std::env::args_os()) {
        Ok((text, code)) => {
            println!("{text}");
            std::process::exit(code);
        }
        Err(err) => err.exit(),
    }
}
