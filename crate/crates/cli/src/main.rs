mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;

use bubblepat::oracle::DEFAULT_CAP;
use bubblepat::{Oracle, OracleConfig};

use args::Cli;
use report::{CommandReport, VERSION};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let oracle = Oracle::new(OracleConfig {
        cap: DEFAULT_CAP,
        workers: cli.workers,
    });
    let inputs = commands::inputs_of(&cli.command);
    let outcome = commands::run(&cli.command, &oracle);
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let (result, text, code) = match outcome {
        Ok(out) => (out.result, Some(out.text), out.exit),
        Err(failure) => {
            let payload = failure.payload();
            eprintln!("error: {}", payload.message);
            (json!({ "error": payload }), None, failure.exit_code())
        }
    };

    if cli.json {
        let report = CommandReport {
            command: inputs.command().to_string(),
            inputs,
            result,
            elapsed_ms,
            version: VERSION.to_string(),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else if let Some(text) = text {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
