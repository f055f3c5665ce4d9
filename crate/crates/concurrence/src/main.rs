use std::io::Write;

use clap::Parser;
use concurrence::commands::{self, Cli};
use concurrence::exit;

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = match commands::run(cli, &mut lock) {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = lock.flush();
    std::process::exit(code);
}
