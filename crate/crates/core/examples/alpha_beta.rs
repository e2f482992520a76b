//! `alpha_(2m+1,0)` and `alpha_(2m,0)` from the power series, the binomial
//! sums and the product tables, side by side.
//!
//! `cargo run --example alpha_beta -- [m]`

use minshadow::gleason::{alpha_2m1_closed, alpha_2m_closed, alpha_direct, tables, ParamSet};

fn main() {
    let m: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("m must be an integer"))
        .unwrap_or(8);
    for t in 1..12 {
        let p = ParamSet::from_mt(m, t).unwrap();
        let odd = alpha_direct(&p, 2 * m + 1);
        assert_eq!(odd, alpha_2m1_closed(&p));
        let table = tables::alpha_2m1_product(t, m);
        println!(
            "n={:>4}: alpha_(2m+1) = {odd} (product form: {})",
            p.n,
            match table {
                Some(v) if v == odd => "agrees",
                Some(_) => "DIFFERS",
                None => "undefined",
            }
        );
        if m >= 1 {
            let even = alpha_direct(&p, 2 * m);
            assert_eq!(even, alpha_2m_closed(&p));
            if let Some(v) = tables::alpha_2m_product(t, m) {
                println!("          alpha_(2m)   = {even} (product form agrees: {})", v == even);
            }
        }
    }
}
