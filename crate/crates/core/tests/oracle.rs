//! The exhaustive code oracle against itself and the solver, on random
//! self-dual codes built as direct sums of small ones.

use minshadow::arith;
use minshadow::gf2::{cross_validate, parse_code, shadow_decompose, BinaryCode};
use minshadow::solver::{shadow_transform, WeightEnumerator};
use proptest::prelude::*;

const SHIPPED: [(&str, &str); 6] = [
    ("sd12", include_str!("../data/codes/sd12_6_4.txt")),
    ("sd14", include_str!("../data/codes/sd14_7_4.txt")),
    ("sd16", include_str!("../data/codes/sd16_8_4.txt")),
    ("sd18", include_str!("../data/codes/sd18_9_4_min_shadow.txt")),
    ("sd36", include_str!("../data/codes/sd36_18_8_min_shadow.txt")),
    ("e8", include_str!("../data/codes/hamming8_4_4.txt")),
];

fn shipped(name: &str) -> BinaryCode {
    let text = SHIPPED.iter().find(|(k, _)| *k == name).unwrap().1;
    parse_code(text).unwrap()
}

fn i2() -> BinaryCode {
    BinaryCode::new(2, vec![0b11]).unwrap()
}

fn direct_sum(parts: &[BinaryCode]) -> BinaryCode {
    let mut rows = Vec::new();
    let mut offset = 0;
    for p in parts {
        rows.extend(p.rows().iter().map(|r| r << offset));
        offset += p.n();
    }
    BinaryCode::new(offset, rows).unwrap()
}

fn permute(code: &BinaryCode, perm: &[usize]) -> BinaryCode {
    let rows = code
        .rows()
        .iter()
        .map(|r| (0..code.n()).filter(|i| r >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << perm[i]))
        .collect();
    BinaryCode::new(code.n(), rows).unwrap()
}

fn mix_rows(code: &BinaryCode, ops: &[(usize, usize)]) -> BinaryCode {
    let mut rows = code.rows().to_vec();
    let k = rows.len();
    for &(a, b) in ops {
        let (a, b) = (a % k, b % k);
        if a != b {
            rows[a] ^= rows[b];
        }
    }
    BinaryCode::new(code.n(), rows).unwrap()
}

fn product(a: &WeightEnumerator, b: &WeightEnumerator) -> WeightEnumerator {
    let terms = a
        .terms()
        .flat_map(|(i, x)| b.terms().map(move |(j, y)| (i + j, x * y)))
        .collect::<Vec<_>>();
    WeightEnumerator::new(a.n + b.n, terms)
}

/// Shadow enumerator of a self-dual component: the code itself when doubly even.
fn component_shadow(c: &BinaryCode) -> WeightEnumerator {
    if c.is_doubly_even() {
        c.weight_enumerator().unwrap()
    } else {
        shadow_decompose(c).unwrap().shadow
    }
}

fn parts() -> impl Strategy<Value = Vec<BinaryCode>> {
    let pick = prop_oneof![
        Just("i2"),
        Just("sd12"),
        Just("sd14"),
        Just("sd16"),
        Just("e8"),
    ];
    prop::collection::vec(pick, 1..5).prop_map(|names| {
        let mut out = Vec::new();
        let mut n = 0;
        for name in names {
            let c = if name == "i2" { i2() } else { shipped(name) };
            if n + c.n() <= 32 {
                n += c.n();
                out.push(c);
            }
        }
        if !out.iter().any(|c| !c.is_doubly_even()) && n + 2 <= 32 {
            out.push(i2());
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumerators_of_direct_sums(
        parts in parts(),
        seed in prop::collection::vec(0usize..1000, 32),
        ops in prop::collection::vec((0usize..64, 0usize..64), 0..40),
    ) {
        let plain = direct_sum(&parts);
        let n = plain.n();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, seed[i] % (i + 1));
        }
        let code = mix_rows(&permute(&plain, &perm), &ops);
        prop_assert!(code.is_self_dual());

        let w = code.weight_enumerator().unwrap();
        let w_expected = parts
            .iter()
            .map(|c| c.weight_enumerator().unwrap())
            .reduce(|a, b| product(&a, &b))
            .unwrap();
        prop_assert_eq!(&w, &w_expected);
        prop_assert_eq!(w.total(), arith::pow2((n / 2) as i64));

        if code.is_singly_even_self_dual() {
            let s = shadow_decompose(&code).unwrap().shadow;
            prop_assert_eq!(&s, &shadow_transform(&w));
            let s_expected = parts
                .iter()
                .map(component_shadow)
                .reduce(|a, b| product(&a, &b))
                .unwrap();
            prop_assert_eq!(&s, &s_expected);
        }
    }
}

#[test]
fn shipped_codes_are_what_their_names_say() {
    for (name, n, d) in [("sd12", 12, 4), ("sd14", 14, 4), ("sd16", 16, 4), ("sd18", 18, 4), ("sd36", 36, 8), ("e8", 8, 4)] {
        let c = shipped(name);
        assert_eq!(c.n(), n, "{name}");
        assert!(c.is_self_dual(), "{name}");
        assert_eq!(c.min_distance().unwrap(), Some(d), "{name}");
    }
    assert!(shipped("e8").is_doubly_even());
}

#[test]
fn extremal_minimal_shadow_codes_match_the_solver() {
    for (name, shadow_weight) in [("sd12", 2), ("sd14", 3), ("sd16", 4), ("sd36", 2)] {
        let x = cross_validate(&shipped(name)).unwrap();
        assert!(x.passed(), "{name}: {:?}", x.mismatched_weights);
        assert_eq!(x.shadow.min_weight(false), Some(shadow_weight), "{name}");
    }
}

#[test]
fn length_eighteen_is_not_determined() {
    let x = cross_validate(&shipped("sd18")).unwrap();
    assert!(x.satisfies_conditions);
    assert!(x.basis_reproduces);
    assert_eq!(x.matches_solver, None);
    assert_eq!(x.solver.label(), "family(1)");
}

#[test]
fn permuting_coordinates_keeps_the_oracle_verdict() {
    let c = shipped("sd14");
    let perm: Vec<usize> = (0..14).map(|i| (5 * i + 3) % 14).collect();
    let p = permute(&c, &perm);
    assert_eq!(p.weight_enumerator().unwrap(), c.weight_enumerator().unwrap());
    assert!(cross_validate(&p).unwrap().passed());
}
