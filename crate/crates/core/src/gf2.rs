//! Exhaustive oracle on explicit binary codes of length at most 64: weight
//! distributions, the doubly-even subcode and its cosets, the shadow, and a
//! comparison against the solver's predictions.
//!
//! Codewords are `u64` bit masks; column `j` of the text form is bit `j`.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::arith::Rational;
use crate::gleason::{basis_matrices, ParamSet};
use crate::solver::{build_constraints, classify, enumerators_from_c, Verdict, WeightEnumerator};

/// Largest dimension enumerated codeword by codeword.
pub const DIRECT_LIMIT: usize = 24;
/// Largest dimension enumerated with a precomputed half-span table.
pub const SPLIT_LIMIT: usize = 32;
/// Rows in the precomputed half of a split enumeration.
const SPLIT_TABLE_ROWS: usize = 16;
/// Longest code `shadow_decompose` accepts.
pub const SHADOW_MAX_LENGTH: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("no generator rows")]
    Empty,
    #[error("line {line}: expected {expected} columns, got {got}")]
    Ragged { line: usize, expected: usize, got: usize },
    #[error("line {line}: '{ch}' is not a binary digit")]
    NonBinary { line: usize, ch: char },
    #[error("length {0} exceeds the supported maximum of 64")]
    TooLong(usize),
    #[error("generator rows are dependent: {rows} rows but rank {rank}")]
    RankDeficient { rows: usize, rank: usize },
    #[error("dimension {dimension} exceeds the enumeration limit {limit}")]
    Budget { dimension: usize, limit: usize },
    #[error("length {n} exceeds the shadow enumeration limit {limit}")]
    LengthBudget { n: usize, limit: usize },
    #[error("not a singly-even self-dual code")]
    NotSinglyEvenSelfDual,
}

/// Row-reduces `rows` in place; returns the rank. Nonzero rows come first.
fn echelon(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for bit in 0..64 {
        let mask = 1u64 << bit;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r] & mask != 0 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// `v` reduced against a fully reduced echelon basis; zero iff `v` is in
/// the span.
fn reduce(basis: &[u64], mut v: u64) -> u64 {
    for b in basis {
        let lead = b.trailing_zeros();
        if v >> lead & 1 == 1 {
            v ^= b;
        }
    }
    v
}

/// Basis of the orthogonal complement of `rows` in `GF(2)^n`.
fn dual_basis(rows: &[u64], n: usize) -> Vec<u64> {
    let mut ech = rows.to_vec();
    let rank = echelon(&mut ech);
    ech.truncate(rank);
    let pivots: Vec<u32> = ech.iter().map(|r| r.trailing_zeros()).collect();
    (0..n as u32)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = 1u64 << free;
            for (r, p) in ech.iter().zip(&pivots) {
                if r >> free & 1 == 1 {
                    v |= 1u64 << p;
                }
            }
            v
        })
        .collect()
}

fn weight(v: u64) -> usize {
    v.count_ones() as usize
}

/// Counts of `popcount(offset ^ x)` over the span of `rows`, by Gray code.
fn span_histogram(rows: &[u64], offset: u64, n: usize) -> Vec<u64> {
    let mut hist = vec![0u64; n + 1];
    let mut x = offset;
    hist[weight(x)] += 1;
    for i in 1u64..(1u64 << rows.len()) {
        x ^= rows[i.trailing_zeros() as usize];
        hist[weight(x)] += 1;
    }
    hist
}

fn span(rows: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << rows.len());
    let mut x = 0u64;
    out.push(x);
    for i in 1u64..(1u64 << rows.len()) {
        x ^= rows[i.trailing_zeros() as usize];
        out.push(x);
    }
    out
}

/// A binary linear code given by independent generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
}

impl BinaryCode {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self, CodeError> {
        if n > 64 {
            return Err(CodeError::TooLong(n));
        }
        let mut ech = rows.clone();
        let rank = echelon(&mut ech);
        if rank < rows.len() {
            return Err(CodeError::RankDeficient {
                rows: rows.len(),
                rank,
            });
        }
        Ok(BinaryCode { n, rows })
    }

    /// The code `{0}`.
    pub fn zero(n: usize) -> Self {
        BinaryCode { n, rows: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .all(|a| self.rows.iter().all(|b| (a & b).count_ones() % 2 == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.n && self.is_self_orthogonal()
    }

    /// Self-orthogonal with every weight divisible by 4. Checking the
    /// generators suffices.
    pub fn is_doubly_even(&self) -> bool {
        self.is_self_orthogonal() && self.rows.iter().all(|r| weight(*r).is_multiple_of(4))
    }

    pub fn is_singly_even_self_dual(&self) -> bool {
        self.is_self_dual() && !self.is_doubly_even()
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>, CodeError> {
        let k = self.dimension();
        if k <= DIRECT_LIMIT {
            return Ok(span_histogram(&self.rows, 0, self.n));
        }
        if k > SPLIT_LIMIT {
            return Err(CodeError::Budget {
                dimension: k,
                limit: SPLIT_LIMIT,
            });
        }
        let (head, tail) = self.rows.split_at(k - SPLIT_TABLE_ROWS);
        let table = span(tail);
        let n = self.n;
        Ok(span(head)
            .into_par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut hist, a| {
                    for b in &table {
                        hist[weight(a ^ b)] += 1;
                    }
                    hist
                },
            )
            .reduce(
                || vec![0u64; n + 1],
                |mut x, y| {
                    x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
                    x
                },
            ))
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator, CodeError> {
        Ok(WeightEnumerator::from_counts(self.n, &self.weight_distribution()?))
    }

    /// Smallest nonzero weight; `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>, CodeError> {
        let dist = self.weight_distribution()?;
        Ok((1..=self.n).find(|&w| dist[w] > 0))
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: String = (0..self.n)
                .map(|j| if r >> j & 1 == 1 { '1' } else { '0' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Reads one generator row per line from `'0'`/`'1'` characters. Whitespace
/// inside a line, blank lines and `#` comments are ignored.
pub fn parse_code(text: &str) -> Result<BinaryCode, CodeError> {
    let mut n = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let bits: Vec<char> = body.chars().filter(|c| !c.is_whitespace()).collect();
        if bits.is_empty() {
            continue;
        }
        if let Some(ch) = bits.iter().find(|c| **c != '0' && **c != '1') {
            return Err(CodeError::NonBinary { line, ch: *ch });
        }
        let expected = *n.get_or_insert(bits.len());
        if bits.len() != expected {
            return Err(CodeError::Ragged {
                line,
                expected,
                got: bits.len(),
            });
        }
        if expected > 64 {
            return Err(CodeError::TooLong(expected));
        }
        let row = bits
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == '1')
            .fold(0u64, |acc, (j, _)| acc | 1u64 << j);
        rows.push(row);
    }
    let n = n.ok_or(CodeError::Empty)?;
    BinaryCode::new(n, rows)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub n: usize,
    pub dimension: usize,
    pub self_dual: bool,
    pub doubly_even: bool,
    pub singly_even: bool,
    pub min_distance: Option<usize>,
    /// Largest distance allowed for this length, for self-dual codes.
    pub distance_bound: Option<usize>,
    pub extremal: Option<bool>,
    /// Only for singly-even self-dual codes.
    pub shadow_min_weight: Option<usize>,
    pub minimal_shadow: Option<bool>,
}

pub fn checks(code: &BinaryCode) -> Result<CodeReport, CodeError> {
    let self_dual = code.is_self_dual();
    let doubly_even = code.is_doubly_even();
    let singly_even = self_dual && !doubly_even;
    let min_distance = code.min_distance()?;
    let params = if self_dual && code.n > 0 {
        ParamSet::new(code.n).ok()
    } else {
        None
    };
    let distance_bound = params.map(|p| p.d);
    let extremal = distance_bound.map(|d| min_distance == Some(d));
    let (shadow_min_weight, minimal_shadow) = match (singly_even && code.n <= SHADOW_MAX_LENGTH, params) {
        (true, Some(p)) => {
            let dec = shadow_decompose(code)?;
            let w = dec.shadow.min_weight(false);
            (w, Some(w == Some(p.minimal_shadow_weight())))
        }
        _ => (None, None),
    };
    Ok(CodeReport {
        n: code.n,
        dimension: code.dimension(),
        self_dual,
        doubly_even,
        singly_even,
        min_distance,
        distance_bound,
        extremal,
        shadow_min_weight,
        minimal_shadow,
    })
}

/// `C_0^perp = C_0 + C_1 + C_2 + C_3` for a singly-even self-dual `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowDecomposition {
    /// Generators of the doubly-even subcode `C_0`.
    pub c0: Vec<u64>,
    /// Coset representatives; `C_1` holds a minimum-weight shadow vector.
    pub c1: u64,
    pub c2: u64,
    pub c3: u64,
    pub shadow: WeightEnumerator,
}

impl ShadowDecomposition {
    pub fn c0_dimension(&self) -> usize {
        self.c0.len()
    }
}

pub fn shadow_decompose(code: &BinaryCode) -> Result<ShadowDecomposition, CodeError> {
    if !code.is_singly_even_self_dual() {
        return Err(CodeError::NotSinglyEvenSelfDual);
    }
    if code.n > SHADOW_MAX_LENGTH {
        return Err(CodeError::LengthBudget {
            n: code.n,
            limit: SHADOW_MAX_LENGTH,
        });
    }
    // wt(v)/2 mod 2 is linear on C; C_0 is its kernel
    let odd = |v: &u64| weight(*v) % 4 == 2;
    let g = *code.rows.iter().find(|r| odd(r)).expect("singly-even");
    let c0: Vec<u64> = code
        .rows
        .iter()
        .filter(|r| **r != g)
        .map(|r| if odd(r) { r ^ g } else { *r })
        .collect();

    let mut c_basis = code.rows.clone();
    let rank = echelon(&mut c_basis);
    c_basis.truncate(rank);
    let s = dual_basis(&c0, code.n)
        .into_iter()
        .find(|v| reduce(&c_basis, *v) != 0)
        .expect("C_0^perp is larger than C");

    let n = code.n;
    let (h_a, h_b) = rayon::join(|| span_histogram(&c0, s, n), || span_histogram(&c0, s ^ g, n));
    let min_of = |h: &[u64]| h.iter().position(|c| *c > 0);
    let (c1, c3) = if min_of(&h_b) < min_of(&h_a) { (s ^ g, s) } else { (s, s ^ g) };
    let counts: Vec<u64> = h_a.iter().zip(&h_b).map(|(a, b)| a + b).collect();
    Ok(ShadowDecomposition {
        c0,
        c1,
        c2: g,
        c3,
        shadow: WeightEnumerator::from_counts(n, &counts),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub params: ParamSet,
    pub weight: WeightEnumerator,
    pub shadow: WeightEnumerator,
    /// `c = A^-1 a` from the enumerated `W`.
    pub basis_coeffs: Vec<Rational>,
    /// The enumerated code meets every row of the coefficient conditions.
    pub satisfies_conditions: bool,
    /// The basis coefficients rebuild both enumerated polynomials.
    pub basis_reproduces: bool,
    pub solver: Verdict,
    /// Enumerated `W` and `S` equal the solver's; `None` unless unique.
    pub matches_solver: Option<bool>,
    /// Weights where the solver's prediction differs.
    pub mismatched_weights: Vec<usize>,
}

impl CrossValidation {
    pub fn passed(&self) -> bool {
        self.satisfies_conditions && self.basis_reproduces && self.matches_solver == Some(true)
    }
}

fn differing(a: &WeightEnumerator, b: &WeightEnumerator) -> Vec<usize> {
    (0..=a.n).filter(|w| a.coeff(*w) != b.coeff(*w)).collect()
}

/// Enumerates `W` and `S` of `code` and compares them with the prediction
/// for its length.
pub fn cross_validate(code: &BinaryCode) -> Result<CrossValidation, CodeError> {
    let dec = shadow_decompose(code)?;
    let weight = code.weight_enumerator()?;
    let params = ParamSet::new(code.n).expect("self-dual codes have even positive length");

    let a: Vec<Rational> = (0..params.num_unknowns()).map(|j| weight.coeff(2 * j)).collect();
    let alpha = basis_matrices(&params)
        .alpha()
        .expect("unit lower triangular");
    let c = alpha.mul_vec(&a);
    let sys = build_constraints(&params, true);
    let satisfies_conditions = sys.satisfied_by(&c);
    let (w_rebuilt, s_rebuilt) = enumerators_from_c(&params, &c).expect("length k + 1");
    let basis_reproduces = w_rebuilt == weight && s_rebuilt == dec.shadow;

    let cls = classify(&params);
    let (matches_solver, mismatched_weights) = match &cls.enumerators {
        Some((w, s)) => {
            let mut bad = differing(&weight, w);
            bad.extend(differing(&dec.shadow, s));
            bad.sort_unstable();
            bad.dedup();
            (Some(bad.is_empty()), bad)
        }
        None => (None, Vec::new()),
    };
    Ok(CrossValidation {
        params,
        weight,
        shadow: dec.shadow,
        basis_coeffs: c,
        satisfies_conditions,
        basis_reproduces,
        solver: cls.verdict,
        matches_solver,
        mismatched_weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith;
    use crate::solver::shadow_transform;
    use num_traits::Zero;
    use proptest::prelude::*;

    const SD12: &str = include_str!("../data/codes/sd12_6_4.txt");
    const SD14: &str = include_str!("../data/codes/sd14_7_4.txt");
    const SD16: &str = include_str!("../data/codes/sd16_8_4.txt");
    const SD18: &str = include_str!("../data/codes/sd18_9_4_min_shadow.txt");
    const H8: &str = include_str!("../data/codes/hamming8_4_4.txt");

    #[test]
    fn parse_errors() {
        assert_eq!(parse_code("# nothing\n\n"), Err(CodeError::Empty));
        assert_eq!(
            parse_code("1100\n110\n"),
            Err(CodeError::Ragged { line: 2, expected: 4, got: 3 })
        );
        assert_eq!(parse_code("1102\n"), Err(CodeError::NonBinary { line: 1, ch: '2' }));
        assert_eq!(
            parse_code("1100\n0011\n1111\n"),
            Err(CodeError::RankDeficient { rows: 3, rank: 2 })
        );
        let c = parse_code("1 1 0 0  # comment\n\n0011\n").unwrap();
        assert_eq!((c.n(), c.dimension()), (4, 2));
        assert_eq!(c.to_string(), "1100\n0011\n");
    }

    #[test]
    fn length_twelve() {
        let c = parse_code(SD12).unwrap();
        assert_eq!(c.weight_distribution().unwrap(), vec![1, 0, 0, 0, 15, 0, 32, 0, 15, 0, 0, 0, 1]);
        let r = checks(&c).unwrap();
        assert!(r.self_dual && r.singly_even && !r.doubly_even);
        assert_eq!(r.min_distance, Some(4));
        assert_eq!(r.extremal, Some(true));
        assert_eq!(r.shadow_min_weight, Some(2));
        assert_eq!(r.minimal_shadow, Some(true));
        let d = shadow_decompose(&c).unwrap();
        assert_eq!(d.c0_dimension(), 5);
        assert_eq!(d.shadow.to_string(), "6y^2 + 52y^6 + 6y^10");
        assert_eq!(weight(d.c1), 2);
    }

    #[test]
    fn hamming_is_doubly_even() {
        let c = parse_code(H8).unwrap();
        let r = checks(&c).unwrap();
        assert!(r.self_dual && r.doubly_even && !r.singly_even);
        assert_eq!(r.shadow_min_weight, None);
        assert_eq!(shadow_decompose(&c), Err(CodeError::NotSinglyEvenSelfDual));
    }

    #[test]
    fn non_extremal_self_dual() {
        // i2^6: six copies of 11, d = 2 < 4
        let rows = (0..6).map(|i| 0b11u64 << (2 * i)).collect();
        let c = BinaryCode::new(12, rows).unwrap();
        let r = checks(&c).unwrap();
        assert!(r.self_dual);
        assert_eq!(r.extremal, Some(false));
    }

    #[test]
    fn zero_code() {
        let z = BinaryCode::zero(6);
        assert_eq!(z.weight_enumerator().unwrap().to_string(), "1");
        assert_eq!(z.min_distance().unwrap(), None);
    }

    #[test]
    fn split_enumeration_matches_direct() {
        // i2^13: weight distribution C(13, w/2)
        let rows: Vec<u64> = (0..26).map(|i| 0b11u64 << (2 * i)).collect();
        let c = BinaryCode::new(52, rows).unwrap();
        let dist = c.weight_distribution().unwrap();
        for (w, count) in dist.iter().enumerate() {
            let expect = if w % 2 == 0 { arith::binom(26, w as i64 / 2).unwrap() } else { 0.into() };
            assert_eq!(num_bigint::BigInt::from(*count), expect, "w={w}");
        }
        let too_big = BinaryCode::new(64, (0..33).map(|i| 1u64 << i).collect()).unwrap();
        assert_eq!(
            too_big.weight_distribution(),
            Err(CodeError::Budget { dimension: 33, limit: SPLIT_LIMIT })
        );
    }

    #[test]
    fn small_lengths_match_solver() {
        for (text, r) in [(SD12, 2usize), (SD14, 3), (SD16, 4)] {
            let c = parse_code(text).unwrap();
            let x = cross_validate(&c).unwrap();
            assert!(x.passed(), "n={}: {x:?}", c.n());
            assert_eq!(x.shadow.min_weight(false), Some(r));
            assert_eq!(x.weight.total(), arith::pow2(c.n() as i64 / 2));
        }
    }

    #[test]
    fn length_eighteen_is_not_determined() {
        let c = parse_code(SD18).unwrap();
        let r = checks(&c).unwrap();
        assert_eq!(r.minimal_shadow, Some(true));
        let x = cross_validate(&c).unwrap();
        assert!(x.satisfies_conditions && x.basis_reproduces);
        assert_eq!(x.shadow, shadow_transform(&x.weight));
    }

    #[test]
    fn shadow_properties() {
        for text in [SD12, SD14, SD16, SD18] {
            let c = parse_code(text).unwrap();
            let d = shadow_decompose(&c).unwrap();
            let n = c.n();
            assert_eq!(d.shadow.total(), arith::pow2(n as i64 / 2));
            assert!(d.shadow.coeff(0).is_zero());
            for (w, _) in d.shadow.terms() {
                assert_eq!(w % 4, (n / 2) % 4);
                assert_eq!(d.shadow.coeff(w), d.shadow.coeff(n - w));
            }
            assert_eq!(d.shadow, shadow_transform(&c.weight_enumerator().unwrap()));
            // [C : C_0] = 2
            assert_eq!(d.c0_dimension() + 1, c.dimension());
            assert_eq!(shadow_decompose(&parse_code(text).unwrap()).unwrap(), d);
        }
    }

    proptest! {
        #[test]
        fn distribution_total(rows in proptest::collection::vec(1u64..(1 << 20), 0..10)) {
            let mut ech = rows.clone();
            let rank = echelon(&mut ech);
            ech.truncate(rank);
            let c = BinaryCode::new(20, ech).unwrap();
            let dist = c.weight_distribution().unwrap();
            prop_assert_eq!(dist.iter().sum::<u64>(), 1u64 << rank);
            prop_assert_eq!(dist[0], 1);
        }

        #[test]
        fn dual_is_orthogonal(rows in proptest::collection::vec(0u64..(1 << 16), 1..8)) {
            let dual = dual_basis(&rows, 16);
            let mut ech = rows.clone();
            let rank = echelon(&mut ech);
            prop_assert_eq!(dual.len(), 16 - rank);
            for a in &rows {
                for b in &dual {
                    prop_assert_eq!((a & b).count_ones() % 2, 0);
                }
            }
        }
    }
}
