//! Solves the extremal and minimal-shadow conditions for one length and
//! prints the verdict, `W`, `S` and the failed shadow check if any.
//!
//! `cargo run --release --example enumerate -- [n]`

use minshadow::gleason::ParamSet;
use minshadow::solver::{classify, SolveOutcome};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(36);
    let p = ParamSet::new(n).expect("n must be even and positive");
    let c = classify(&p);
    println!("{p}");
    println!("{}", c.verdict);
    match &c.outcome {
        SolveOutcome::Unique { c: coeffs } => {
            let (w, s) = c.enumerators.as_ref().unwrap();
            println!("c = {:?}", coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            println!("W = {w}");
            println!("S = {s}");
            if let Some(v) = c.screen.as_ref().and_then(|r| r.first_violation()) {
                println!("first violation: {} at weight {:?}", v.check, v.weight);
            }
        }
        SolveOutcome::Inconsistent { witness, .. } => {
            let tags: Vec<String> = witness.iter().map(|t| t.to_string()).collect();
            println!("conflicting rows: {}", tags.join(", "));
        }
        SolveOutcome::Family { dimension, .. } => println!("{dimension} free parameter(s)"),
    }
}
