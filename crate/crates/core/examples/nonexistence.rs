//! For the four families with no extremal minimal-shadow codes, checks the
//! polynomial, its reduction from `alpha - beta` and the solver.
//!
//! `cargo run --release --example nonexistence -- [m_max]`

use minshadow::theorems::{check_nonexistence, NONEXISTENT_FAMILIES};

fn main() {
    let m_max = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("m_max must be an integer"))
        .unwrap_or(20);
    for t in NONEXISTENT_FAMILIES {
        let r = check_nonexistence(t, m_max).unwrap();
        let smallest = r.rows.iter().map(|row| row.residual.clone()).min().unwrap();
        println!(
            "t={t} (n = 24m+{}): {} never vanishes (smallest value {smallest}); {} rows, all pass: {}",
            2 * t,
            r.polynomial,
            r.rows.len(),
            r.passed()
        );
    }
}
