use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use slice_lab::cli::{run, Cli};

fn configure_threads() {
    let Ok(value) = std::env::var("SLICE_LAB_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("slice-lab: cannot configure thread pool: {e}");
            }
        }
        _ => eprintln!("slice-lab: ignoring SLICE_LAB_THREADS={value:?} (expected a positive integer)"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("slice-lab: {e}");
            2
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
