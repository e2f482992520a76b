//! Prints the per-residue-class table: nonexistent, bounded or open.
//!
//! `cargo run --release --example summary -- [m_max]`

use minshadow::theorems::summary;

fn main() {
    let m_max = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("m_max must be an integer"))
        .unwrap_or(30);
    let s = summary(m_max);
    print!("{s}");
    if !s.passed() {
        std::process::exit(1);
    }
}
