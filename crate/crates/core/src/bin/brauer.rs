use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use brauer::cli::{run, CliConfig, USAGE_EXIT_CODE};
use clap::Parser;

fn main() -> ExitCode {
    let config = CliConfig::parse();
    let result = match &config.output_path {
        Some(path) => File::create(path)
            .map_err(brauer::Error::from)
            .and_then(|f| {
                let mut w = BufWriter::new(f);
                let status = run(&config, &mut w)?;
                w.flush()?;
                Ok(status)
            }),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout);
            run(&config, &mut w).and_then(|status| {
                w.flush()?;
                Ok(status)
            })
        }
    };
    match result {
        Ok(status) => ExitCode::from(status.exit_code() as u8),
        Err(e) => {
            let record = serde_json::json!({ "error": "usage", "message": e.to_string() });
            eprintln!("{record}");
            ExitCode::from(USAGE_EXIT_CODE as u8)
        }
    }
}
