use std::sync::atomic::{AtomicBool, Ordering};

static STOP: AtomicBool = AtomicBool::new(false);

fn main() {
    // Without a handler, an interrupt simply kills the process.
    let _ = ctrlc::set_handler(|| STOP.store(true, Ordering::Relaxed));
    let code = sumgraph::app::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        &STOP,
    );
    std::process::exit(code);
}
