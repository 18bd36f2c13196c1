use std::io::Write;

fn main() {
    let (code, out, err) = gt_cli::execute(std::env::args_os());
    if !out.is_empty() {
        let mut stdout = std::io::stdout();
        let _ = stdout.write_all(out.as_bytes());
    }
    if !err.is_empty() {
        let mut stderr = std::io::stderr();
        let _ = stderr.write_all(err.as_bytes());
    }
    std::process::exit(code);
}
