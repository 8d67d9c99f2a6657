use std::io::Write;

use sahi_kernels_cli::{run, Format, Status};

fn main() {
    let result = run(std::env::args().skip(1));
    let out = result.render();
    if result.status == Status::Error && result.format != Format::Json {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    std::process::exit(result.exit_code);
}
