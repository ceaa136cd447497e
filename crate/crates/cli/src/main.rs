use std::io;

fn main() {
    let code = griffiths_cli::app::main_with(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
