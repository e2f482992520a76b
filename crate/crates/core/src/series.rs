//! Truncated sparse formal power series over exact rationals.
//!
//! A [`Series`] stands for `sum c_d y^d + O(y^trunc)`. Only nonzero
//! coefficients are stored, all at degrees below `trunc`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{self, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncMismatch { left: usize, right: usize },
    #[error("degree {degree} is not below the truncation {trunc}")]
    BeyondTruncation { degree: usize, trunc: usize },
    #[error("(1 - y^2)^(-a) needs a > 0, got a = {0}")]
    NonPositiveExponent(i64),
}

/// Sign of the inner term in `(1 ± y^step)^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    trunc: usize,
    coeffs: BTreeMap<usize, Rational>,
}

impl Series {
    pub fn zero(trunc: usize) -> Self {
        Series {
            trunc,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(arith::int(1), 0, trunc)
    }

    pub fn monomial(coeff: Rational, degree: usize, trunc: usize) -> Self {
        Self::from_terms([(degree, coeff)], trunc)
    }

    /// Builds a series from `(degree, coefficient)` pairs. Repeated degrees
    /// are summed; terms at or above `trunc` are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for (d, c) in terms {
            s.add_term(d, c);
        }
        s
    }

    fn add_term(&mut self, degree: usize, c: Rational) {
        if degree >= self.trunc || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact expansion of `(1 + sign * y^step)^exponent`.
    pub fn from_binomial_power(sign: Sign, exponent: u64, step: usize, trunc: usize) -> Self {
        assert!(step > 0, "step must be positive");
        let len = if trunc == 0 { 0 } else { (trunc - 1) / step + 1 };
        let coeffs = binomial_power_coeffs(sign, exponent, len);
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(s, c)| (s * step, arith::from_integer(c))),
            trunc,
        )
    }

    /// `(1 - y^2)^(-a) = sum_j C(a + j - 1, j) y^(2j)` for `a > 0`.
    pub fn inv_even_power(a: i64, trunc: usize) -> Result<Self, SeriesError> {
        if a <= 0 {
            return Err(SeriesError::NonPositiveExponent(a));
        }
        let mut s = Self::zero(trunc);
        let mut c = Integer::one();
        let mut j: u64 = 0;
        while 2 * (j as usize) < trunc {
            s.coeffs.insert(2 * j as usize, arith::from_integer(c.clone()));
            // C(a + j, j + 1) = C(a + j - 1, j) * (a + j) / (j + 1)
            c *= a as u64 + j;
            c /= j + 1;
            j += 1;
        }
        Ok(s)
    }

    /// `(1 + y^step)^plus * (1 - y^step)^minus`, computed directly from a
    /// three-term recurrence rather than by multiplying two expansions.
    pub fn binomial_pair(plus: u64, minus: u64, step: usize, trunc: usize) -> Self {
        assert!(step > 0, "step must be positive");
        let len = if trunc == 0 { 0 } else { (trunc - 1) / step + 1 };
        Self::from_terms(
            binomial_pair_coeffs(plus, minus, len)
                .into_iter()
                .enumerate()
                .map(|(s, c)| (s * step, arith::from_integer(c))),
            trunc,
        )
    }

    fn check_trunc(&self, other: &Series) -> Result<(), SeriesError> {
        if self.trunc != other.trunc {
            return Err(SeriesError::TruncMismatch {
                left: self.trunc,
                right: other.trunc,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_trunc(other)?;
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (da, ca) in &self.coeffs {
            for (db, cb) in other.coeffs.range(..self.trunc - da) {
                *acc.entry(da + db).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Series {
            trunc: self.trunc,
            coeffs: acc,
        })
    }

    pub fn add(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_trunc(other)?;
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series, SeriesError> {
        self.check_trunc(other)?;
        let mut out = self.clone();
        for (d, c) in &other.coeffs {
            out.add_term(*d, -c);
        }
        Ok(out)
    }

    /// Coefficient of `y^degree`; asking at or past the truncation is an
    /// error because the value is unknown there.
    pub fn coeff_of(&self, degree: usize) -> Result<Rational, SeriesError> {
        if degree >= self.trunc {
            return Err(SeriesError::BeyondTruncation {
                degree,
                trunc: self.trunc,
            });
        }
        Ok(self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero))
    }

    /// `[y^degree] (self * other)` without forming the whole product.
    pub fn coeff_of_product(&self, other: &Series, degree: usize) -> Result<Rational, SeriesError> {
        self.check_trunc(other)?;
        if degree >= self.trunc {
            return Err(SeriesError::BeyondTruncation {
                degree,
                trunc: self.trunc,
            });
        }
        let mut acc = Rational::zero();
        for (d, c) in self.coeffs.range(..=degree) {
            if let Some(o) = other.coeffs.get(&(degree - d)) {
                acc += c * o;
            }
        }
        Ok(acc)
    }

    /// `factor * y^shift * self`, re-truncated at the same order.
    pub fn scale_shift(&self, factor: &Rational, shift: usize) -> Series {
        let mut out = Series::zero(self.trunc);
        if factor.is_zero() {
            return out;
        }
        for (d, c) in &self.coeffs {
            let nd = d + shift;
            if nd >= self.trunc {
                break;
            }
            out.coeffs.insert(nd, c * factor);
        }
        out
    }

    /// Same terms under a different truncation order.
    pub fn with_trunc(&self, trunc: usize) -> Series {
        Series {
            trunc,
            coeffs: self
                .coeffs
                .range(..trunc)
                .map(|(d, c)| (*d, c.clone()))
                .collect(),
        }
    }

    /// Sum of the stored coefficients, i.e. the truncated polynomial at `y = 1`.
    pub fn sum_coefficients(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |a, c| a + c)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(y^{})", self, self.trunc)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*y")?,
                _ => write!(f, "{c}*y^{d}")?,
            }
        }
        Ok(())
    }
}

/// First `len` coefficients of `(1 ± x)^e`.
pub fn binomial_power_coeffs(sign: Sign, exponent: u64, len: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(len);
    let mut c = BigInt::one();
    for s in 0..len as u64 {
        if s > exponent {
            out.push(BigInt::zero());
            continue;
        }
        let v = if sign == Sign::Minus && s % 2 == 1 {
            -c.clone()
        } else {
            c.clone()
        };
        out.push(v);
        c *= exponent - s;
        c /= s + 1;
    }
    out
}

/// First `len` coefficients `e_j` of `(1 + x)^p (1 - x)^q`.
///
/// From `(1 - x^2) P' = ((p - q) - (p + q) x) P`:
/// `(j + 1) e_{j+1} = (p - q) e_j + (j - 1 - p - q) e_{j-1}`,
/// and each division is exact.
pub fn binomial_pair_coeffs(p: u64, q: u64, len: usize) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    if len == 0 {
        return out;
    }
    out.push(BigInt::one());
    if len == 1 {
        return out;
    }
    let diff = p as i64 - q as i64;
    let total = (p + q) as i64;
    out.push(BigInt::from(diff));
    for j in 1..len - 1 {
        let next = (&out[j] * diff + &out[j - 1] * (j as i64 - 1 - total)) / (j as i64 + 1);
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use proptest::prelude::*;

    fn poly(trunc: usize, cs: &[(usize, i64)]) -> Series {
        Series::from_terms(cs.iter().map(|&(d, c)| (d, int(c))), trunc)
    }

    /// Oracle: `(1 + sign y^step)^e` by repeated multiplication.
    fn power_by_multiplication(sign: Sign, e: u64, step: usize, trunc: usize) -> Series {
        let s = if sign == Sign::Plus { 1 } else { -1 };
        let base = poly(trunc, &[(0, 1), (step, s)]);
        let mut acc = Series::one(trunc);
        for _ in 0..e {
            acc = acc.mul(&base).unwrap();
        }
        acc
    }

    #[test]
    fn binomial_powers() {
        assert_eq!(
            Series::from_binomial_power(Sign::Minus, 2, 1, 5),
            poly(5, &[(0, 1), (1, -2), (2, 1)])
        );
        assert_eq!(Series::from_binomial_power(Sign::Plus, 0, 2, 9), Series::one(9));
        let s = Series::from_binomial_power(Sign::Minus, 4, 4, 20);
        assert_eq!(s, poly(20, &[(0, 1), (4, -4), (8, 6), (12, -4), (16, 1)]));
        assert_eq!(s, power_by_multiplication(Sign::Minus, 4, 4, 20));
        for e in 0..12 {
            for step in 1..4 {
                for sign in [Sign::Plus, Sign::Minus] {
                    assert_eq!(
                        Series::from_binomial_power(sign, e, step, 17),
                        power_by_multiplication(sign, e, step, 17)
                    );
                }
            }
        }
    }

    #[test]
    fn inverse_even_powers() {
        assert_eq!(
            Series::inv_even_power(2, 6).unwrap(),
            poly(6, &[(0, 1), (2, 2), (4, 3)])
        );
        assert_eq!(
            Series::inv_even_power(1, 8).unwrap(),
            poly(8, &[(0, 1), (2, 1), (4, 1), (6, 1)])
        );
        assert_eq!(
            Series::inv_even_power(0, 8),
            Err(SeriesError::NonPositiveExponent(0))
        );
        for a in 1..=30u64 {
            let inv = Series::inv_even_power(a as i64, 61).unwrap();
            let pow = Series::from_binomial_power(Sign::Minus, a, 2, 61);
            assert_eq!(inv.mul(&pow).unwrap(), Series::one(61), "a = {a}");
        }
    }

    #[test]
    fn pair_recurrence_matches_product() {
        for p in 0..15u64 {
            for q in 0..15u64 {
                for step in [1, 2, 4] {
                    let direct = Series::from_binomial_power(Sign::Plus, p, step, 40)
                        .mul(&Series::from_binomial_power(Sign::Minus, q, step, 40))
                        .unwrap();
                    assert_eq!(Series::binomial_pair(p, q, step, 40), direct, "p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn multiplication_basics() {
        let a = poly(10, &[(0, 1), (1, 1)]);
        let b = poly(10, &[(0, 1), (1, -1)]);
        assert_eq!(a.mul(&b).unwrap(), poly(10, &[(0, 1), (2, -1)]));
        assert_eq!(a.mul(&Series::one(10)).unwrap(), a);
        assert_eq!(
            a.mul(&Series::one(11)),
            Err(SeriesError::TruncMismatch { left: 10, right: 11 })
        );
    }

    #[test]
    fn coefficient_extraction() {
        let s = poly(5, &[(0, 1), (2, 3)]);
        assert_eq!(s.coeff_of(2).unwrap(), int(3));
        assert_eq!(s.coeff_of(1).unwrap(), int(0));
        assert_eq!(
            s.coeff_of(5),
            Err(SeriesError::BeyondTruncation { degree: 5, trunc: 5 })
        );
    }

    #[test]
    fn alpha_extraction_matches_sum_formula_at_m1_t1() {
        // -(12m+t)/(2m+1) * [y^{2m}] (1-y^2)^{-4m-2} (1+y)^{5-t}, m = 1, t = 1
        let s = Series::inv_even_power(6, 3)
            .unwrap()
            .mul(&Series::from_binomial_power(Sign::Plus, 4, 1, 3))
            .unwrap();
        let extracted = -ratio(13, 3) * s.coeff_of(2).unwrap();
        // sum over s of C(4, 2s) C(5m+1-s, m-s) at m = 1: C(4,0)C(6,1) + C(4,2)C(5,0)
        let by_sum = -ratio(13, 3) * int(6 + 6);
        assert_eq!(extracted, by_sum);
    }

    #[test]
    fn scale_and_shift() {
        let s = poly(10, &[(0, 1), (1, 1)]);
        assert_eq!(s.scale_shift(&int(2), 3), poly(10, &[(3, 2), (4, 2)]));
        assert!(s.scale_shift(&int(0), 3).is_zero());
        assert_eq!(s.scale_shift(&int(1), 9), poly(10, &[(9, 1)]));
    }

    fn arb_series(trunc: usize) -> impl Strategy<Value = Series> {
        proptest::collection::vec((0..trunc, -20i64..20, 1i64..5), 0..8).prop_map(move |ts| {
            Series::from_terms(ts.into_iter().map(|(d, p, q)| (d, ratio(p, q))), trunc)
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn coeff_of_is_linear(a in arb_series(12), b in arb_series(12), d in 0usize..12) {
            let sum = a.add(&b).unwrap();
            prop_assert_eq!(sum.coeff_of(d).unwrap(), a.coeff_of(d).unwrap() + b.coeff_of(d).unwrap());
        }

        #[test]
        fn scale_shift_unfolds(a in arb_series(16), p in -9i64..9, q in 1i64..9, shift in 0usize..20) {
            let f = ratio(p, q);
            let s = a.scale_shift(&f, shift);
            for d in 0..16 {
                let expect = if d >= shift { a.coeff_of(d - shift).unwrap() * &f } else { int(0) };
                prop_assert_eq!(s.coeff_of(d).unwrap(), expect);
            }
        }

        #[test]
        fn stored_terms_are_nonzero_and_in_range(a in arb_series(10), b in arb_series(10)) {
            for s in [a.mul(&b).unwrap(), a.sub(&b).unwrap(), a.add(&a).unwrap().sub(&a).unwrap()] {
                for (d, c) in s.terms() {
                    prop_assert!(d < 10);
                    prop_assert!(!c.is_zero());
                }
            }
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }
    }
}
