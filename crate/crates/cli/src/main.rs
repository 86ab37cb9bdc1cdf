use std::io::Write;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::Parser;
use tribone_cli::{execute, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    let timeout = cli.timeout_seconds;
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(execute(cli.command));
    });
    let result = match timeout {
        Some(secs) if secs.is_finite() && secs >= 0.0 => match rx.recv_timeout(Duration::from_secs_f64(secs)) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("error: timed out after {secs} seconds");
                return ExitCode::from(1);
            }
        },
        Some(secs) => {
            eprintln!("error: invalid timeout {secs}");
            return ExitCode::from(2);
        }
        None => rx.recv().expect("worker thread finished"),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            eprint!("{}", out.stderr);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
