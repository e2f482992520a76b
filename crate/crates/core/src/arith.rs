//! Exact integers, rationals and binomial coefficients.
//!
//! Everything in this crate is computed without rounding. Integers are
//! [`num_bigint::BigInt`]; rationals are [`num_rational::BigRational`],
//! which is kept in lowest terms with a positive denominator after every
//! operation.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact rational number, always normalized.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    /// Negative upper index; expand `(1 - y^2)^(-a)` through the series
    /// identity instead.
    #[error("binomial coefficient with negative upper index {0}")]
    NegativeUpper(i64),
    #[error("not an exact rational: {0:?}")]
    Parse(String),
}

/// `C(a, k)` for `a >= 0`, zero when `k < 0` or `k > a`.
pub fn binom(a: i64, k: i64) -> Result<Integer, ArithError> {
    if a < 0 {
        return Err(ArithError::NegativeUpper(a));
    }
    Ok(binom_nonneg(a as u64, k))
}

/// Same as [`binom`] for an upper index that is known to be non-negative.
pub fn binom_nonneg(a: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > a {
        return Integer::zero();
    }
    let k = (k as u64).min(a - k as u64);
    let mut acc = Integer::one();
    // acc = C(a - k + i, i) after step i, so every division is exact.
    for i in 1..=k {
        acc *= a - k + i;
        acc /= i;
    }
    acc
}

/// Binomial coefficient that treats a negative upper index as "vanishes",
/// the convention the closed-form product tables rely on for small `m`.
pub(crate) fn binom_or_zero(a: i64, k: i64) -> Integer {
    if a < 0 {
        Integer::zero()
    } else {
        binom_nonneg(a as u64, k)
    }
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn from_integer(v: Integer) -> Rational {
    Rational::from_integer(v)
}

/// `2^e` for any integer `e`, as an exact rational.
pub fn pow2(e: i64) -> Rational {
    let p = Integer::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new_raw(Integer::one(), p)
    }
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}

/// `-1` raised to `e`.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// Inverse of [`format_rational`]. Accepts non-canonical input such as
/// `-2/4` and normalizes it.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let s = s.trim();
    let bad = || ArithError::Parse(s.to_string());
    match s.split_once('/') {
        None => Integer::from_str(s).map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p = Integer::from_str(p.trim()).map_err(|_| bad())?;
            let q = Integer::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    use num_integer::Integer as _;
    values
        .into_iter()
        .fold(Integer::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn pascal(rows: usize) -> Vec<Vec<Integer>> {
        let mut t: Vec<Vec<Integer>> = vec![vec![Integer::one()]];
        for a in 1..=rows {
            let prev = &t[a - 1];
            let mut row = vec![Integer::one(); a + 1];
            for k in 1..a {
                row[k] = &prev[k - 1] + &prev[k];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binom(5, 2).unwrap(), Integer::from(10));
        assert_eq!(binom(4, 7).unwrap(), Integer::zero());
        assert_eq!(binom(4, -1).unwrap(), Integer::zero());
        assert_eq!(binom(0, 0).unwrap(), Integer::one());
        assert_eq!(binom(-3, 1), Err(ArithError::NegativeUpper(-3)));
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let t = pascal(200);
        assert_eq!(binom(50, 25).unwrap(), t[50][25]);
        assert_eq!(
            binom(50, 25).unwrap().to_string(),
            "126410606437752"
        );
        for (a, row) in t.iter().enumerate() {
            for (k, v) in row.iter().enumerate().take(a + 1) {
                assert_eq!(&binom(a as i64, k as i64).unwrap(), v, "C({a},{k})");
            }
        }
    }

    #[test]
    fn binomial_symmetry_and_recurrence() {
        for a in 1..=200i64 {
            for k in 0..=a {
                assert_eq!(binom(a, k).unwrap(), binom(a, a - k).unwrap());
                if 0 < k && k < a {
                    assert_eq!(
                        binom(a, k).unwrap(),
                        binom(a - 1, k - 1).unwrap() + binom(a - 1, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn rational_basics() {
        assert_eq!(ratio(1, 2) + ratio(1, 3), ratio(5, 6));
        let x = ratio(-2, 4);
        assert_eq!(format_rational(&x), "-1/2");
        assert_eq!(x.denom(), &Integer::from(2));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
        assert_eq!(pow2(-3), ratio(1, 8));
        assert_eq!(pow2(10), int(1024));
        assert_eq!(pow2(0), int(1));
    }

    #[test]
    #[should_panic]
    fn division_by_zero_panics() {
        let _ = int(1) / int(0);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(p, q)| ratio(p, q))
    }

    proptest! {
        #[test]
        fn products_with_inverses_are_one(xs in proptest::collection::vec(arb_rational(), 100)) {
            let nonzero: Vec<&Rational> = xs.iter().filter(|x| !x.is_zero()).collect();
            let prod = nonzero.iter().fold(int(1), |a, x| a * *x);
            let inv = nonzero.iter().fold(int(1), |a, x| a * x.recip());
            prop_assert_eq!(prod * inv, int(1));
        }

        #[test]
        fn normalization_is_idempotent(p in -10_000i64..10_000, q in 1i64..10_000) {
            let once = ratio(p, q);
            let twice = Rational::new(once.numer().clone(), once.denom().clone());
            prop_assert_eq!(&once, &twice);
            prop_assert!(once.denom().is_positive());
            prop_assert_eq!(parse_rational(&format_rational(&once)).unwrap(), once);
        }
    }
}
