//! Explains an inconsistent system: the rows involved and exact multipliers
//! that combine them into `0 = 1`.
//!
//! `cargo run --example certificate -- [n]`

use minshadow::gleason::ParamSet;
use minshadow::solver::{build_constraints, SolveOutcome};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(26);
    let p = ParamSet::new(n).expect("n must be even and positive");
    let sys = build_constraints(&p, true);
    println!("{p}: {} rows, {} unknowns", sys.rows.len(), sys.num_unknowns);
    for row in &sys.rows {
        let coeffs: Vec<String> = row.coeffs.iter().map(|(i, v)| format!("{v}*c_{i}")).collect();
        println!("  {}: {} = {}", row.tag, coeffs.join(" + "), row.rhs);
    }
    let SolveOutcome::Inconsistent { witness, .. } = sys.solve() else {
        println!("the system is consistent");
        return;
    };
    let cert = sys.certificate(&witness).expect("inconsistent rows have a certificate");
    for (tag, lambda) in &cert.multipliers {
        println!("  {lambda} * ({tag})");
    }
    println!("sum is 0 = 1: {}", cert.verify(&sys));
}
