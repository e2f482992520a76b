//! Enumerates the shipped generator matrices exhaustively and compares
//! their enumerators with the solver.
//!
//! `cargo run --release --example code_oracle -- [matrix files...]`

use std::path::PathBuf;

use minshadow::gf2::{checks, cross_validate, parse_code, shadow_decompose};

fn main() {
    let mut files: Vec<PathBuf> = std::env::args().skip(1).map(PathBuf::from).collect();
    if files.is_empty() {
        let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/codes");
        files = ["sd12_6_4.txt", "sd14_7_4.txt", "sd16_8_4.txt", "sd18_9_4_min_shadow.txt", "hamming8_4_4.txt"]
            .iter()
            .map(|f| dir.join(f))
            .collect();
    }
    for f in files {
        let text = std::fs::read_to_string(&f).expect("readable matrix file");
        let code = parse_code(&text).expect("valid generator matrix");
        let r = checks(&code).unwrap();
        println!("{}: [{}, {}, {:?}]", f.display(), r.n, r.dimension, r.min_distance);
        println!("  W = {}", code.weight_enumerator().unwrap());
        println!(
            "  self-dual {}, singly-even {}, extremal {:?}, minimal shadow {:?}",
            r.self_dual, r.singly_even, r.extremal, r.minimal_shadow
        );
        let Ok(dec) = shadow_decompose(&code) else {
            println!("  no shadow decomposition (not singly-even self-dual)");
            continue;
        };
        println!("  S = {}", dec.shadow);
        let x = cross_validate(&code).unwrap();
        println!("  solver: {}; matches: {:?}", x.solver, x.matches_solver);
    }
}
