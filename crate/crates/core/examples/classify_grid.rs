//! Verdict for every length `24m + 2t` up to a small `m`.
//!
//! `cargo run --release --example classify_grid -- [m_max]`

use minshadow::gleason::ParamSet;
use minshadow::solver::classify;

fn main() {
    let m_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("m_max must be an integer"))
        .unwrap_or(6);
    print!("{:>4}", "t\\m");
    for m in 0..=m_max {
        print!(" {m:>12}");
    }
    println!();
    for t in 0..12 {
        print!("{t:>4}");
        for m in 0..=m_max {
            let label = match ParamSet::from_mt(m, t) {
                Ok(p) => classify(&p).verdict.label(),
                Err(_) => "-".into(),
            };
            print!(" {label:>12}");
        }
        println!();
    }
}
