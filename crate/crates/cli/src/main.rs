use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use nimcash_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let result = match &cli.out {
        Some(path) => File::create(path)
            .map_err(anyhow::Error::from)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                let r = run(&cli, stdin.lock(), &mut w);
                w.flush()?;
                r
            }),
        None => {
            let mut out = io::stdout().lock();
            run(&cli, stdin.lock(), &mut out)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
