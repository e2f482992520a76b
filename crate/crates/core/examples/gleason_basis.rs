//! Expands the Gleason-type bases for a small length and inverts the basis
//! matrices to get `alpha` and `beta`.
//!
//! `cargo run --example gleason_basis -- [n]`

use minshadow::arith::format_rational;
use minshadow::gleason::{basis_matrices, basis_s, basis_w, beta, ParamSet};
use num_traits::Zero;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(12);
    let p = ParamSet::new(n).expect("n must be even and positive");
    println!("{p}, k = {}", p.k());
    for i in 0..=p.k() {
        let idx = p.basis_index(i).unwrap();
        println!("  W basis {i}: {}", basis_w(&p, idx, n + 1));
        println!("  S basis {i}: {}", basis_s(&p, idx, n + 1));
    }

    let mats = basis_matrices(&p);
    let alpha = mats.alpha().expect("A is unit lower triangular");
    let inv_b = mats.beta().expect("B is invertible");
    println!("alpha = A^-1:");
    for r in 0..alpha.rows() {
        let row: Vec<String> = alpha.row(r).iter().map(format_rational).collect();
        println!("  [{}]", row.join(", "));
    }
    println!("beta_(i,j): formula vs B^-1");
    for i in 1..=p.k() {
        for j in 0..=p.k() {
            let f = beta(&p, i, j);
            assert_eq!(f, inv_b[(i, j)]);
            if !f.is_zero() {
                println!("  beta_({i},{j}) = {}", format_rational(&f));
            }
        }
    }
}
