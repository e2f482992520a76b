use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Integer, Rational};
use crate::gleason::{self, ParamSet};
use crate::series::binomial_pair_coeffs;

use super::SolverError;

/// Weight enumerator with exact coefficients, indexed by weight.
///
/// Coefficients are rational so that a non-integral prediction can be
/// reported rather than rounded.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub n: usize,
    coeffs: BTreeMap<usize, Rational>,
}

impl WeightEnumerator {
    pub fn new(n: usize, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (w, c) in terms {
            assert!(w <= n, "weight {w} exceeds length {n}");
            if !c.is_zero() {
                *coeffs.entry(w).or_insert_with(Rational::zero) += c;
            }
        }
        coeffs.retain(|_, c: &mut Rational| !c.is_zero());
        WeightEnumerator { n, coeffs }
    }

    pub fn from_counts(n: usize, counts: &[u64]) -> Self {
        Self::new(
            n,
            counts
                .iter()
                .enumerate()
                .map(|(w, c)| (w, arith::from_integer(BigInt::from(*c)))),
        )
    }

    pub fn coeff(&self, w: usize) -> Rational {
        self.coeffs.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in increasing weight.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.coeffs.iter().map(|(w, c)| (*w, c))
    }

    /// Value at `y = 1`.
    pub fn total(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(arith::is_integral)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Smallest weight with a nonzero coefficient, optionally skipping 0.
    pub fn min_weight(&self, skip_zero: bool) -> Option<usize> {
        self.coeffs.keys().copied().find(|w| !skip_zero || *w > 0)
    }

    pub fn integer_coeffs(&self) -> Option<BTreeMap<usize, Integer>> {
        self.coeffs
            .iter()
            .map(|(w, c)| arith::is_integral(c).then(|| (*w, c.to_integer())))
            .collect()
    }

    /// First `count` nonzero terms, rendered like the full display.
    pub fn prefix(&self, count: usize) -> String {
        render(self.coeffs.iter().take(count))
    }
}

fn render<'a>(terms: impl Iterator<Item = (&'a usize, &'a Rational)>) -> String {
    let mut out = String::new();
    for (idx, (w, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one() && *w > 0;
        if !unit {
            out.push_str(&mag.to_string());
        }
        match w {
            0 => {}
            1 => out.push('y'),
            _ => out.push_str(&format!("y^{w}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.coeffs.iter()))
    }
}

impl fmt::Debug for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightEnumerator(n={}: {})", self.n, self)
    }
}

/// Scales `values` to integers: returns `(D, D * values)` with `D` the
/// least common denominator.
fn scaled(values: &[Rational]) -> (Integer, Vec<Integer>) {
    let d = arith::common_denominator(values);
    let ints = values
        .iter()
        .map(|v| v.numer() * (&d / v.denom()))
        .collect();
    (d, ints)
}

/// `W` and `S` for the basis coefficients `c` (length `k + 1`).
pub fn enumerators_from_c(
    p: &ParamSet,
    c: &[Rational],
) -> Result<(WeightEnumerator, WeightEnumerator), SolverError> {
    if c.len() != p.num_unknowns() {
        return Err(SolverError::WrongLength {
            expected: p.num_unknowns(),
            got: c.len(),
        });
    }
    let half = p.half();

    // W in x = y^2: c_i x^i (1+x)^(N-4i) (1-x)^(2i)
    let (dw, cw) = scaled(c);
    let mut acc = vec![Integer::zero(); half + 1];
    for (i, ci) in cw.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let body = binomial_pair_coeffs((half - 4 * i) as u64, 2 * i as u64, half - 2 * i + 1);
        for (s, e) in body.iter().enumerate() {
            if !e.is_zero() {
                acc[i + s] += ci * e;
            }
        }
    }
    let den = arith::from_integer(dw);
    let w = WeightEnumerator::new(
        p.n,
        acc.into_iter()
            .enumerate()
            .map(|(j, v)| (2 * j, arith::from_integer(v) / &den)),
    );

    // S: b_j = sum_i c_i (-1)^i 2^(N-6i) (-1)^s C(2i, s), j = k - i + s
    let k = p.k();
    let weighted: Vec<Rational> = c
        .iter()
        .enumerate()
        .map(|(i, ci)| ci * gleason::basis_s_factor(p, i))
        .collect();
    let (ds, cs) = scaled(&weighted);
    let mut acc = vec![Integer::zero(); 2 * k + 1];
    for (i, ci) in cs.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let mut binom = Integer::one();
        for s in 0..=2 * i {
            let term = ci * &binom;
            if s % 2 == 0 {
                acc[k - i + s] += term;
            } else {
                acc[k - i + s] -= term;
            }
            binom *= 2 * i - s;
            binom /= s + 1;
        }
    }
    let den = arith::from_integer(ds);
    let s = WeightEnumerator::new(
        p.n,
        acc.into_iter()
            .enumerate()
            .map(|(j, v)| (p.shadow_degree(j), arith::from_integer(v) / &den)),
    );
    Ok((w, s))
}

/// Shadow enumerator computed from `W` alone:
/// `S(y) = 2^(-n/2) sum_w A_w (-1)^(w/2) (1+y)^(n-w) (1-y)^w`.
///
/// Independent of the Gleason basis; used to cross-check it.
///
/// With `z = 1 + y` the sum is `z^n R(2/z - 1)` where `R(u) = sum_w g_w u^w`,
/// so two Taylor shifts and a power-of-two scaling do the work in integer
/// additions only.
pub fn shadow_transform(w: &WeightEnumerator) -> WeightEnumerator {
    let n = w.n;
    let mut g = vec![Integer::zero(); n + 1];
    let den = arith::common_denominator(w.coeffs.values());
    for (wt, a) in w.terms() {
        assert!(wt % 2 == 0, "odd weight {wt} in an even code");
        let v = a.numer() * (&den / a.denom());
        g[wt] = if (wt / 2) % 2 == 0 { v } else { -v };
    }
    taylor_shift(&mut g, false);
    // coefficient of z^(n-k) is 2^k e_k
    let mut z: Vec<Integer> = g.into_iter().enumerate().map(|(k, e)| e << k).collect();
    z.reverse();
    taylor_shift(&mut z, true);
    let scale = arith::pow2(-((n / 2) as i64)) / arith::from_integer(den);
    WeightEnumerator::new(
        n,
        z.into_iter()
            .enumerate()
            .map(|(d, v)| (d, arith::from_integer(v) * &scale)),
    )
}

/// In place `f(x) -> f(x + 1)` or `f(x) -> f(x - 1)`.
fn taylor_shift(c: &mut [Integer], plus: bool) {
    let len = c.len();
    for i in 0..len.saturating_sub(1) {
        for j in (i..len - 1).rev() {
            let (lo, hi) = c.split_at_mut(j + 1);
            if plus {
                lo[j] += &hi[0];
            } else {
                lo[j] -= &hi[0];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::series::Series;
    use crate::solver::{build_constraints, SolveOutcome};

    fn unique(n: usize) -> (ParamSet, Vec<Rational>) {
        let p = ParamSet::new(n).unwrap();
        match build_constraints(&p, true).solve() {
            SolveOutcome::Unique { c } => (p, c),
            other => panic!("n={n}: {other:?}"),
        }
    }

    fn ints(n: usize, terms: &[(usize, i64)]) -> WeightEnumerator {
        WeightEnumerator::new(n, terms.iter().map(|&(w, c)| (w, int(c))))
    }

    #[test]
    fn length_twelve() {
        let (p, c) = unique(12);
        let (w, s) = enumerators_from_c(&p, &c).unwrap();
        assert_eq!(w, ints(12, &[(0, 1), (4, 15), (6, 32), (8, 15), (12, 1)]));
        assert_eq!(s, ints(12, &[(2, 6), (6, 52), (10, 6)]));
        assert_eq!(s.min_weight(false), Some(2));
        assert_eq!(w.to_string(), "1 + 15y^4 + 32y^6 + 15y^8 + y^12");
    }

    #[test]
    fn length_thirty_six() {
        let (p, c) = unique(36);
        let (w, s) = enumerators_from_c(&p, &c).unwrap();
        assert_eq!(w.prefix(4), "1 + 289y^8 + 1632y^10 + 10387y^12");
        assert_eq!(s.prefix(3), "y^2 + 34y^6 + 3808y^10");
    }

    #[test]
    fn agrees_with_basis_series() {
        for n in [14usize, 16, 36, 38, 62] {
            let (p, c) = unique(n);
            let (w, s) = enumerators_from_c(&p, &c).unwrap();
            let mut ws = Series::zero(n + 1);
            let mut ss = Series::zero(n + 1);
            for (i, ci) in c.iter().enumerate() {
                let bi = p.basis_index(i).unwrap();
                ws = ws.add(&gleason::basis_w(&p, bi, n + 1).scale_shift(ci, 0)).unwrap();
                ss = ss.add(&gleason::basis_s(&p, bi, n + 1).scale_shift(ci, 0)).unwrap();
            }
            for d in 0..=n {
                assert_eq!(w.coeff(d), ws.coeff_of(d).unwrap(), "n={n} W y^{d}");
                assert_eq!(s.coeff(d), ss.coeff_of(d).unwrap(), "n={n} S y^{d}");
            }
        }
    }

    #[test]
    fn transform_matches_basis_shadow() {
        for n in [12usize, 14, 16, 36, 38, 56, 60, 62, 86] {
            let (p, c) = unique(n);
            let (w, s) = enumerators_from_c(&p, &c).unwrap();
            assert_eq!(shadow_transform(&w), s, "n={n}");
        }
    }

    #[test]
    fn value_at_one() {
        for n in [12usize, 36, 62, 84, 110] {
            let (p, c) = unique(n);
            let (w, _) = enumerators_from_c(&p, &c).unwrap();
            assert_eq!(w.total(), arith::pow2(p.half() as i64));
        }
    }

    fn transform_direct(w: &WeightEnumerator) -> WeightEnumerator {
        let n = w.n;
        let mut acc = vec![Rational::zero(); n + 1];
        for (wt, a) in w.terms() {
            let f = a * arith::int(arith::sign_pow((wt / 2) as i64));
            for (d, e) in binomial_pair_coeffs((n - wt) as u64, wt as u64, n + 1).into_iter().enumerate() {
                acc[d] += &f * arith::from_integer(e);
            }
        }
        let scale = arith::pow2(-((n / 2) as i64));
        WeightEnumerator::new(n, acc.into_iter().enumerate().map(|(d, v)| (d, v * &scale)))
    }

    proptest::proptest! {
        #[test]
        fn transform_matches_direct_expansion(
            half in 1usize..20,
            raw in proptest::collection::vec((0usize..40, -50i64..50, 1i64..4), 0..8),
        ) {
            let n = 2 * half;
            let w = WeightEnumerator::new(
                n,
                raw.into_iter().map(|(j, a, d)| (2 * (j % (half + 1)), arith::ratio(a, d))),
            );
            proptest::prop_assert_eq!(shadow_transform(&w), transform_direct(&w));
        }
    }

    #[test]
    fn wrong_length() {
        let p = ParamSet::new(36).unwrap();
        assert_eq!(
            enumerators_from_c(&p, &[int(1)]),
            Err(SolverError::WrongLength { expected: 5, got: 1 })
        );
    }

    #[test]
    fn rendering() {
        let e = WeightEnumerator::new(8, [(0, int(1)), (2, int(-3)), (4, arith::ratio(1, 2)), (8, int(1))]);
        assert_eq!(e.to_string(), "1 - 3y^2 + 1/2y^4 + y^8");
        assert!(!e.is_integral());
        assert!(!e.is_nonnegative());
        assert_eq!(WeightEnumerator::new(4, []).to_string(), "0");
    }
}
