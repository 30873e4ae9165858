use std::io;
use std::process::ExitCode;
use std::sync::atomic::AtomicBool;
use std::sync::Arc;

use domset::cli::{run, Env};

fn main() -> ExitCode {
    let stop = Arc::new(AtomicBool::new(false));
    for signal in [signal_hook::consts::SIGTERM, signal_hook::consts::SIGINT] {
        // Without the handler the process just dies on the signal.
        let _ = signal_hook::flag::register(signal, Arc::clone(&stop));
    }
    let mut env = Env {
        stdin: &mut io::stdin().lock(),
        stdout: &mut io::stdout().lock(),
        stderr: &mut io::stderr(),
        stop: Some(stop),
    };
    let code = run(std::env::args_os(), &mut env);
    ExitCode::from(code as u8)
}
