mod args;
mod commands;
mod format;

use clap::Parser;

fn init_threads() {
    let Ok(v) = std::env::var("BCB_THREADS") else {
        return;
    };
    match v.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
            {
                eprintln!("warning: BCB_THREADS ignored: {e}");
            }
        }
        _ => eprintln!("warning: BCB_THREADS={v:?} is not a positive integer; ignored"),
    }
}

fn main() {
    let cli = args::Cli::parse();
    init_threads();
    if let Err(e) = commands::run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
