use std::io::Write;

fn main() {
    let result = monoideal::cli::run(std::env::args_os());
    let rendered = result.rendered();
    if !rendered.is_empty() {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(rendered.as_bytes());
        if !rendered.ends_with('\n') {
            let _ = stdout.write_all(b"\n");
        }
    }
    std::process::exit(result.exit_code());
}
