mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use args::Cli;
use commands::{CliError, Output};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    let result = commands::run(&cli);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(Output::Json(mut value)) => {
            if cli.timing {
                if let Value::Object(map) = &mut value {
                    map.insert("elapsed_ms".into(), json!(elapsed_ms));
                }
            }
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
            ExitCode::SUCCESS
        }
        Ok(Output::Csv(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            if cli.timing {
                eprintln!("elapsed_ms: {elapsed_ms:.3}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let (kind, code) = match &err {
                CliError::Usage(_) => ("usage", 1),
                CliError::Core(semisimple_core::Error::Resource(_)) => ("resource", 3),
                CliError::Core(_) => ("domain", 2),
            };
            let doc = json!({ "error": { "kind": kind, "message": err.to_string() } });
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            eprintln!("error: {err}");
            ExitCode::from(code)
        }
    }
}
