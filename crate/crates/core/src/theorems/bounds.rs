use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::arith::{self, binom_nonneg, binom_or_zero, Rational};
use crate::gleason::{alpha_2m1_closed, alpha_2m_closed, beta, ParamSet};
use crate::solver::{build_constraints, shadow_coefficient};

use super::{Polynomial, TheoremError};

/// Shadow coefficient named relative to `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShadowIndex {
    M,
    MPlus1,
    MPlus2,
}

impl ShadowIndex {
    pub fn offset(self) -> usize {
        match self {
            ShadowIndex::M => 0,
            ShadowIndex::MPlus1 => 1,
            ShadowIndex::MPlus2 => 2,
        }
    }

    pub fn at(self, m: usize) -> usize {
        m + self.offset()
    }
}

impl fmt::Display for ShadowIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShadowIndex::M => f.write_str("b_m"),
            ShadowIndex::MPlus1 => f.write_str("b_(m+1)"),
            ShadowIndex::MPlus2 => f.write_str("b_(m+2)"),
        }
    }
}

/// `(t, coefficient that turns negative, first m where it does)`.
pub const BOUNDED_FAMILIES: [(usize, ShadowIndex, usize); 4] = [
    (4, ShadowIndex::MPlus1, 53),
    (6, ShadowIndex::MPlus1, 142),
    (7, ShadowIndex::MPlus1, 146),
    (9, ShadowIndex::MPlus2, 157),
];

/// Zhang's bounds for extremal doubly-even codes of length `24m + 8l`:
/// `(l, m)` means none exist from that `m` on. Stored, not derived.
pub const DOUBLY_EVEN_BOUNDS: [(usize, usize); 3] = [(0, 154), (1, 159), (2, 164)];

fn family(t: usize) -> Result<(ShadowIndex, usize), TheoremError> {
    BOUNDED_FAMILIES
        .iter()
        .find(|(ft, _, _)| *ft == t)
        .map(|(_, idx, m)| (*idx, *m))
        .ok_or(TheoremError::UnsupportedFamily { op: "bound", t })
}

/// The polynomial factor that decides the sign of the bound-carrying
/// coefficient.
pub fn bound_polynomial(t: usize) -> Result<Polynomial, TheoremError> {
    let coeffs: &[i64] = match t {
        4 => &[24, 141, 209, -4],
        6 => &[117, 1257, 4242, 4496, -32],
        7 => &[7875, 107643, 557970, 1386448, 1663728, 772352, -5376],
        9 => &[6930, 52809, 149089, 184210, 83696, -544],
        _ => return Err(TheoremError::UnsupportedFamily { op: "bound polynomial", t }),
    };
    Ok(Polynomial::new(coeffs))
}

fn c(top: i64, bottom: i64) -> Rational {
    arith::from_integer(binom_or_zero(top, bottom))
}

fn poly(t: usize, m: i64) -> Rational {
    arith::from_integer(bound_polynomial(t).expect("bounded family").eval(m))
}

/// Tabulated closed forms for `b_m`, `b_(m+1)` and (for `t = 9`) `b_(m+2)`.
pub fn b_closed_form(t: usize, index: ShadowIndex, m: usize) -> Result<Rational, TheoremError> {
    family(t)?;
    let undefined = TheoremError::Undefined { t, index, m };
    if m == 0 {
        return Err(undefined);
    }
    let mi = m as i64;
    let r = arith::int;
    let value = match (t, index) {
        (4, ShadowIndex::M) => r(6 * mi + 1) / r(mi) * c(5 * mi, mi - 1),
        (6, ShadowIndex::M) => r(12 * mi + 5) / r(2 * mi + 1) * c(5 * mi + 1, mi),
        (7, ShadowIndex::M) => {
            r(168 * mi * mi + 164 * mi + 39) / r((2 * mi + 1) * (4 * mi + 3)) * c(5 * mi + 1, mi)
        }
        (9, ShadowIndex::M) => Rational::zero(),
        (4, ShadowIndex::MPlus1) => {
            r(16 * (6 * mi + 1)) * poly(4, mi) / r(5 * mi * (mi + 1) * (4 * mi + 3))
                * c(5 * mi + 1, mi - 1)
        }
        (6, ShadowIndex::MPlus1) => {
            r(2 * (12 * mi + 5)) * poly(6, mi)
                / r((5 * mi + 1) * (4 * mi + 3) * (4 * mi + 5) * (2 * mi + 3))
                * c(5 * mi + 2, mi + 1)
        }
        (7, ShadowIndex::MPlus1) => {
            r(2) * poly(7, mi)
                / (r((4 * mi + 3) * (4 * mi + 5) * (2 * mi + 3)) * r((4 * mi + 7) * (5 * mi + 1)))
                * c(5 * mi + 2, mi + 1)
        }
        (9, ShadowIndex::MPlus1) => {
            r((24 * mi + 17) * (17 * mi + 10)) / r((2 * mi + 1) * (4 * mi + 5)) * c(5 * mi + 2, mi + 1)
        }
        (9, ShadowIndex::MPlus2) => {
            r(2 * (24 * mi + 17)) * poly(9, mi)
                / (r((4 * mi + 5) * (2 * mi + 3) * (4 * mi + 7)) * r((4 * mi + 9) * (5 * mi + 2)))
                * c(5 * mi + 3, mi + 2)
        }
        _ => return Err(TheoremError::UnsupportedIndex { t, index }),
    };
    Ok(value)
}

/// The same coefficients from `c_(2m+1)` and `c_(2m)` read both ways:
/// `b_(m+l-1) = -2^(t-6) (alpha_(2m+1,0) - beta_(2m+1,e))`, then the next
/// one from `alpha_(2m,0) = sum_j beta_(2m,j) b_j`.
///
/// `e` is the index carrying the first nonzero `b`: 1 for `t = 4`, else 0.
/// For `t = 4` this needs `m >= 2` so that `b_1` and `b_m` differ.
pub fn b_via_alpha_beta(t: usize, index: ShadowIndex, m: usize) -> Result<Rational, TheoremError> {
    family(t)?;
    let eps = usize::from(t == 4);
    if m == 0 || m <= eps {
        return Err(TheoremError::Undefined { t, index, m });
    }
    let p = ParamSet::from_mt(m, t).expect("valid residue");
    let scale = arith::pow2(t as i64 - 6);
    let first = |p: &ParamSet| -&scale * (alpha_2m1_closed(p) - beta(p, 2 * m + 1, eps));
    let alpha_even = alpha_2m_closed(&p);
    match (t, index) {
        (4 | 6 | 7, ShadowIndex::M) => Ok(first(&p)),
        (4 | 6 | 7, ShadowIndex::MPlus1) => {
            let bm = first(&p);
            Ok((alpha_even - beta(&p, 2 * m, eps) - beta(&p, 2 * m, m) * bm) / beta(&p, 2 * m, m + 1))
        }
        (9, ShadowIndex::MPlus1) => Ok(first(&p)),
        (9, ShadowIndex::MPlus2) => {
            let b1 = first(&p);
            Ok((alpha_even - beta(&p, 2 * m, 0) - beta(&p, 2 * m, m + 1) * b1)
                / beta(&p, 2 * m, m + 2))
        }
        _ => Err(TheoremError::UnsupportedIndex { t, index }),
    }
}

/// `m` even and `C(5m, m)` odd.
pub fn parity_condition(m: usize) -> bool {
    m.is_multiple_of(2) && binom_nonneg(5 * m as u64, m as i64).is_odd()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// Solver only at `m* - 1` and `m*`.
    Bracket,
    /// Solver at every `1 <= m <= m_max`.
    Full,
}

/// The bound-carrying coefficient at one `m`, by every route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverPoint {
    pub m: usize,
    /// `None` if the system does not have a unique solution.
    pub solver: Option<Rational>,
    pub closed_form: Option<Rational>,
    pub via_alpha_beta: Option<Rational>,
}

impl SolverPoint {
    /// Every available route equals the solver value.
    pub fn agrees(&self) -> bool {
        let Some(s) = &self.solver else {
            return false;
        };
        [&self.closed_form, &self.via_alpha_beta]
            .into_iter()
            .flatten()
            .all(|v| v == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdRecord {
    pub t: usize,
    pub index: ShadowIndex,
    pub polynomial: Polynomial,
    pub mode: ScanMode,
    pub m_max: usize,
    /// The tabulated threshold.
    pub stored: usize,
    pub from_polynomial: Option<usize>,
    pub from_closed_form: Option<usize>,
    /// In full mode the first negative solver value; in bracket mode the
    /// polynomial threshold if the solver confirms the sign change there.
    pub from_solver: Option<usize>,
    pub points: Vec<SolverPoint>,
}

impl ThresholdRecord {
    pub fn disagreements(&self) -> impl Iterator<Item = &SolverPoint> {
        self.points.iter().filter(|p| !p.agrees())
    }

    pub fn passed(&self) -> bool {
        let s = Some(self.stored);
        self.from_polynomial == s
            && self.from_closed_form == s
            && self.from_solver == s
            && self.disagreements().next().is_none()
    }
}

fn point(t: usize, index: ShadowIndex, m: usize) -> SolverPoint {
    let p = ParamSet::from_mt(m, t).expect("valid residue");
    let outcome = build_constraints(&p, true).solve();
    SolverPoint {
        m,
        solver: shadow_coefficient(&p, &outcome, index.at(m)).ok(),
        closed_form: b_closed_form(t, index, m).ok(),
        via_alpha_beta: b_via_alpha_beta(t, index, m).ok(),
    }
}

/// Smallest `m >= 1` with a negative bound-carrying coefficient, found from
/// the polynomial, from the closed form and from the solver.
pub fn threshold_scan(t: usize, m_max: usize, mode: ScanMode) -> Result<ThresholdRecord, TheoremError> {
    let (index, stored) = family(t)?;
    if m_max < stored {
        return Err(TheoremError::RangeTooSmall { min: stored, got: m_max });
    }
    let polynomial = bound_polynomial(t)?;
    let from_polynomial = polynomial.first_negative(1, m_max);
    let from_closed_form =
        (1..=m_max).find(|&m| b_closed_form(t, index, m).is_ok_and(|v| v.is_negative()));

    let (points, from_solver) = match mode {
        ScanMode::Full => {
            let points: Vec<SolverPoint> = (1..=m_max)
                .into_par_iter()
                .map(|m| point(t, index, m))
                .collect();
            let first = points
                .iter()
                .find(|p| p.solver.as_ref().is_some_and(|v| v.is_negative()))
                .map(|p| p.m);
            (points, first)
        }
        ScanMode::Bracket => {
            let Some(star) = from_polynomial else {
                return Ok(ThresholdRecord {
                    t,
                    index,
                    polynomial,
                    mode,
                    m_max,
                    stored,
                    from_polynomial,
                    from_closed_form,
                    from_solver: None,
                    points: Vec::new(),
                });
            };
            let points: Vec<SolverPoint> = [star - 1, star]
                .into_par_iter()
                .filter(|&m| m >= 1)
                .map(|m| point(t, index, m))
                .collect();
            let sign_ok = |m: usize, negative: bool| {
                points
                    .iter()
                    .find(|p| p.m == m)
                    .and_then(|p| p.solver.as_ref())
                    .is_some_and(|v| v.is_negative() == negative)
            };
            let confirmed = sign_ok(star, true) && (star == 1 || sign_ok(star - 1, false));
            (points, confirmed.then_some(star))
        }
    };

    Ok(ThresholdRecord {
        t,
        index,
        polynomial,
        mode,
        m_max,
        stored,
        from_polynomial,
        from_closed_form,
        from_solver,
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::solver::solve_length;

    #[test]
    fn tabulated_values() {
        assert_eq!(b_closed_form(4, ShadowIndex::M, 1).unwrap(), int(7));
        // (41 * 27 / (3 * 9)) * C(7, 2)
        assert_eq!(b_closed_form(9, ShadowIndex::MPlus1, 1).unwrap(), int(41 * 21));
        assert!(b_closed_form(4, ShadowIndex::MPlus1, 53).unwrap().is_negative());
        assert!(!b_closed_form(4, ShadowIndex::MPlus1, 52).unwrap().is_negative());
        assert_eq!(b_closed_form(6, ShadowIndex::M, 1).unwrap(), int(34));
        assert_eq!(b_closed_form(4, ShadowIndex::MPlus1, 1).unwrap(), int(592));
    }

    #[test]
    fn closed_form_errors() {
        assert_eq!(
            b_closed_form(4, ShadowIndex::M, 0),
            Err(TheoremError::Undefined { t: 4, index: ShadowIndex::M, m: 0 })
        );
        assert!(matches!(
            b_closed_form(4, ShadowIndex::MPlus2, 3),
            Err(TheoremError::UnsupportedIndex { .. })
        ));
        assert!(matches!(
            b_closed_form(8, ShadowIndex::M, 3),
            Err(TheoremError::UnsupportedFamily { .. })
        ));
        assert!(b_via_alpha_beta(4, ShadowIndex::M, 1).is_err());
    }

    #[test]
    fn three_routes_agree() {
        for (t, idx, _) in BOUNDED_FAMILIES {
            for m in 1..=25 {
                let pt = point(t, idx, m);
                assert!(pt.agrees(), "t={t} m={m}: {pt:?}");
                assert!(pt.closed_form.is_some());
                assert!(arith::is_integral(pt.solver.as_ref().unwrap()));
            }
        }
    }

    #[test]
    fn lower_index_routes() {
        for m in 1..=20 {
            for t in [6usize, 7] {
                let p = ParamSet::from_mt(m, t).unwrap();
                let b = shadow_coefficient(&p, &solve_length(&p), m).unwrap();
                assert_eq!(b, b_closed_form(t, ShadowIndex::M, m).unwrap());
                assert_eq!(b, b_via_alpha_beta(t, ShadowIndex::M, m).unwrap());
            }
            let p = ParamSet::from_mt(m, 9).unwrap();
            let out = solve_length(&p);
            assert!(shadow_coefficient(&p, &out, m).unwrap().is_zero());
            assert_eq!(
                shadow_coefficient(&p, &out, m + 1).unwrap(),
                b_closed_form(9, ShadowIndex::MPlus1, m).unwrap()
            );
            let p = ParamSet::from_mt(m, 4).unwrap();
            let b = shadow_coefficient(&p, &solve_length(&p), m).unwrap();
            if m == 1 {
                // b_1 is both the forced 1 and b_m
                assert_eq!(b, b_closed_form(4, ShadowIndex::M, 1).unwrap() + int(1));
            } else {
                assert_eq!(b, b_closed_form(4, ShadowIndex::M, m).unwrap());
            }
        }
    }

    #[test]
    fn polynomial_signs_at_thresholds() {
        for (t, _, star) in BOUNDED_FAMILIES {
            let p = bound_polynomial(t).unwrap();
            assert!(p.eval(star as i64 - 1).is_positive(), "t={t}");
            assert!(p.eval(star as i64).is_negative(), "t={t}");
            assert_eq!(p.first_negative(1, 400), Some(star));
        }
    }

    #[test]
    fn bracket_scan_t4() {
        let r = threshold_scan(4, 60, ScanMode::Bracket).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.points.len(), 2);
        assert!(threshold_scan(4, 40, ScanMode::Bracket).is_err());
    }

    #[test]
    fn parity_matches_lucas() {
        for m in 0..300usize {
            let lucas = m & (4 * m) == 0;
            assert_eq!(parity_condition(m), m % 2 == 0 && lucas, "m={m}");
        }
    }
}
