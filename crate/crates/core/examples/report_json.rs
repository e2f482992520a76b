//! Drives the command-line entry point in process and reads its JSON
//! report back, checking every value parses to an exact rational.
//!
//! `cargo run --example report_json`

use minshadow::cli::run;
use minshadow::report::Report;

fn main() {
    let out = run(["minshadow", "enumerate", "--n", "38", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let rep = Report::from_json(&out.stdout).expect("valid report");
    println!("schema {}, command {}, passed {}", rep.schema, rep.command, rep.passed);
    let first = &rep.entries[0];
    println!("{}: {}", first.subject, first.verdict);
    for v in first.values.iter().take(6) {
        println!("  {} = {} (parses: {})", v.name, v.value, first.get(&v.name).is_some());
    }
}
