use std::io;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::Parser;
use sicgram_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cancel = Arc::new(AtomicBool::new(false));
    let flag = Arc::clone(&cancel);
    // second Ctrl-C falls through to the default handler
    if let Err(e) = ctrlc::set_handler(move || {
        if flag.swap(true, Ordering::SeqCst) {
            std::process::exit(130);
        }
        eprintln!("interrupt received, writing checkpoints");
    }) {
        eprintln!("warning: cannot install interrupt handler: {e}");
    }
    let code = run(cli, &mut io::stdout().lock(), &mut io::stderr().lock(), Some(&cancel));
    ExitCode::from(code as u8)
}
