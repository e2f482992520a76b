//! `alpha_i = alpha_{i,0}`, the weight of `a_0` in `c_i`.

use num_traits::Zero;

use crate::arith::{self, binom_or_zero, Integer, Rational};
use crate::series::{Series, Sign};

use super::ParamSet;

/// `alpha_{i,0} = -(n/(2i)) [y^(i-1)] (1+y)^(4i-N-1) (1-y)^(-2i)`.
///
/// The negative powers are folded into a single `(1-y^2)^(-a)`:
/// with `e = 6i - N - 1` the series is `(1+y)^e (1-y^2)^(-2i)` when
/// `e >= 0` and `(1-y)^(-e) (1-y^2)^(e-2i)` otherwise. Returns 1 for `i = 0`.
pub fn alpha_direct(p: &ParamSet, i: usize) -> Rational {
    if i == 0 {
        return arith::int(1);
    }
    let trunc = i;
    let e = 6 * i as i64 - p.half() as i64 - 1;
    let (sign, b, a) = if e >= 0 {
        (Sign::Plus, e as u64, 2 * i as i64)
    } else {
        (Sign::Minus, (-e) as u64, 2 * i as i64 - e)
    };
    assert!(a > 0, "(1-y^2)^(-a) needs a > 0, got a = {a}");
    let inv = Series::inv_even_power(a, trunc).expect("positive exponent");
    let lin = Series::from_binomial_power(sign, b, 1, trunc);
    let coeff = inv
        .coeff_of_product(&lin, i - 1)
        .expect("degree below truncation");
    -arith::ratio(p.n as i64, 2 * i as i64) * coeff
}

/// `alpha_{2m+1,0}` from the binomial sums
///
/// ```text
/// t <= 5: -(12m+t)/(2m+1) sum_s C(5-t, 2s) C(5m+1-s, m-s)
/// t >  5: -(12m+t)/(2m+1) sum_s C(t-5, 2s) C(5m+t-4-s, m-s)
/// ```
///
/// The sums are valid for every `m >= 0`.
pub fn alpha_2m1_closed(p: &ParamSet) -> Rational {
    let (m, t) = (p.m as i64, p.t as i64);
    let mut sum = Integer::zero();
    if t <= 5 {
        for s in 0..=(5 - t) / 2 {
            sum += binom_or_zero(5 - t, 2 * s) * binom_or_zero(5 * m + 1 - s, m - s);
        }
    } else {
        for s in 0..=(t - 5) / 2 {
            sum += binom_or_zero(t - 5, 2 * s) * binom_or_zero(5 * m + t - 4 - s, m - s);
        }
    }
    -arith::ratio(12 * m + t, 2 * m + 1) * arith::from_integer(sum)
}

/// `alpha_{2m,0} = (12m+t)/(2m) sum_{s=1}^{floor((t+2)/2)} C(t+1, 2s-1) C(5m+t-s, m-s)`
/// for `m >= 1`; 1 (that is `alpha_{0,0}`) for `m = 0`.
pub fn alpha_2m_closed(p: &ParamSet) -> Rational {
    let (m, t) = (p.m as i64, p.t as i64);
    if m == 0 {
        return arith::int(1);
    }
    let mut sum = Integer::zero();
    for s in 1..=(t + 2) / 2 {
        sum += binom_or_zero(t + 1, 2 * s - 1) * binom_or_zero(5 * m + t - s, m - s);
    }
    arith::ratio(12 * m + t, 2 * m) * arith::from_integer(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(n: usize) -> ParamSet {
        ParamSet::new(n).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(alpha_direct(&p(36), 3), int(-42));
        assert_eq!(alpha_2m1_closed(&p(36)), int(-42));
        assert_eq!(alpha_direct(&p(32), 3), int(-32));
        assert_eq!(alpha_2m1_closed(&p(32)), int(-32));
        // n = 24m + 12 at m = 2: -6 C(12, 2)
        assert_eq!(alpha_2m1_closed(&p(60)), int(-396));
        assert_eq!(alpha_direct(&p(60), 5), int(-396));
        // n = 24m + 10 at m = 1: -(17/3) * 6
        assert_eq!(alpha_2m1_closed(&p(34)), int(-34));
        assert_eq!(alpha_direct(&p(34), 3), int(-34));
    }

    #[test]
    fn first_alpha_is_minus_half_length() {
        for n in (2..200).step_by(2) {
            assert_eq!(alpha_direct(&p(n), 1), -int(n as i64 / 2));
        }
    }

    #[test]
    fn closed_forms_match_extraction() {
        for t in 0..12 {
            for m in 0..=30 {
                if m == 0 && t == 0 {
                    continue;
                }
                let q = ParamSet::from_mt(m, t).unwrap();
                assert_eq!(alpha_direct(&q, 2 * m + 1), alpha_2m1_closed(&q), "2m+1, m={m} t={t}");
                if m >= 1 {
                    assert_eq!(alpha_direct(&q, 2 * m), alpha_2m_closed(&q), "2m, m={m} t={t}");
                }
            }
        }
    }

    #[test]
    fn low_t_case_uses_plus_power() {
        // for t <= 5 and i = 2m+1 the extraction series is (1+y)^(5-t) (1-y^2)^(-4m-2)
        for t in 0..=5usize {
            for m in 1..=10usize {
                let q = ParamSet::from_mt(m, t).unwrap();
                let i = 2 * m + 1;
                let s = Series::inv_even_power(4 * m as i64 + 2, i)
                    .unwrap()
                    .mul(&Series::from_binomial_power(Sign::Plus, 5 - t as u64, 1, i))
                    .unwrap();
                let v = -arith::ratio(q.n as i64, 2 * i as i64) * s.coeff_of(2 * m).unwrap();
                assert_eq!(v, alpha_direct(&q, i));
            }
        }
    }
}
