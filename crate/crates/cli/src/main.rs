use std::io;
use std::process::ExitCode;

use clap::Parser;
use mintri_cli::{crossgraph_limit_from_env, run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let limit = match crossgraph_limit_from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("mintri: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let config = RunConfig::from_cli(cli, limit);
    let code = run(&config, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
