//! Drives the command-line layer in process and prints its JSON report.
//!
//! Run with `cargo run --example cli_report`.

use gkz_rank::cli::{run, Command, MatrixSource, RunRequest};

fn main() {
    let mut req = RunRequest::new(Command::Rank);
    req.matrix = Some(MatrixSource::Family(3, 2));
    req.beta = Some("0,0,0".into());
    let out = run(&req);
    println!("exit status {}", out.status);
    print!("{}", out.stdout);

    req.beta = None;
    let out = run(&req);
    println!("exit status {} without β:", out.status);
    print!("{}", out.stderr);
}
