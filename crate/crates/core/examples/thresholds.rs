//! Finds where each bound-carrying shadow coefficient turns negative, by
//! polynomial, closed form and solver.
//!
//! `cargo run --release --example thresholds -- [full]`

use std::time::Instant;

use minshadow::theorems::{threshold_scan, ScanMode, BOUNDED_FAMILIES};

fn main() {
    let mode = match std::env::args().nth(1).as_deref() {
        Some("full") => ScanMode::Full,
        _ => ScanMode::Bracket,
    };
    for (t, index, _) in BOUNDED_FAMILIES {
        let start = Instant::now();
        let r = threshold_scan(t, 200, mode).expect("200 is above every threshold");
        println!(
            "t={t} {index}: polynomial {:?}, closed form {:?}, solver {:?} ({} points, {:.1?})",
            r.from_polynomial,
            r.from_closed_form,
            r.from_solver,
            r.points.len(),
            start.elapsed()
        );
        for p in &r.points {
            if p.m + 1 >= r.stored && p.m <= r.stored {
                println!("  m={}: {}", p.m, p.solver.as_ref().map_or("-".into(), |v| v.to_string()));
            }
        }
        assert!(r.passed(), "t={t}: routes disagree");
    }
}
