use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{self, binom_or_zero, Rational};
use crate::gleason::{alpha_2m1_closed, beta, ParamSet};
use crate::solver::{build_constraints, ConstraintTag, SolveOutcome};

use super::{Polynomial, TheoremError};

/// Families where `c_(2m+1)` is pinned twice, once by `W` and once by `S`,
/// and the two values never agree.
pub const NONEXISTENT_FAMILIES: [usize; 4] = [1, 2, 3, 5];

/// `48m^2+26m+1`, `24m^2+14m+1`, `48m^2+30m+3` and `6m+3` for
/// `t = 1, 2, 3, 5`.
pub fn nonexistence_polynomial(t: usize) -> Result<Polynomial, TheoremError> {
    let coeffs: &[i64] = match t {
        1 => &[1, 26, 48],
        2 => &[1, 14, 24],
        3 => &[3, 30, 48],
        5 => &[3, 6],
        _ => {
            return Err(TheoremError::UnsupportedFamily {
                op: "nonexistence polynomial",
                t,
            })
        }
    };
    Ok(Polynomial::new(coeffs))
}

/// The factor that turns `alpha_(2m+1,0) - beta_(2m+1,0)` into the
/// polynomial. `None` where it is undefined (`m = 0` for `t = 1, 2, 3`).
pub fn nonexistence_normalizer(t: usize, m: usize) -> Result<Option<Rational>, TheoremError> {
    let mi = m as i64;
    let c = |top: i64, bottom: i64| arith::from_integer(binom_or_zero(top, bottom));
    let (num, den) = match t {
        1 => (arith::int(-5 * mi * (2 * mi + 1)), c(5 * mi, mi - 1) * arith::int(4)),
        2 => (arith::int(-mi * (2 * mi + 1)), c(5 * mi, mi - 1) * arith::int(2)),
        3 => (arith::int(-mi * (2 * mi + 1)), c(5 * mi, mi - 1)),
        5 => (arith::int(-(2 * mi + 1)), c(5 * mi + 1, mi)),
        _ => {
            return Err(TheoremError::UnsupportedFamily {
                op: "nonexistence normalizer",
                t,
            })
        }
    };
    Ok((!den.is_zero()).then(|| num / den))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexistenceRow {
    pub m: usize,
    pub n: usize,
    /// The polynomial at `m`.
    pub residual: BigInt,
    /// `(alpha - beta) * normalizer`, where the normalizer is defined.
    pub reduced: Option<Rational>,
    /// Solver result, for `m >= 1`.
    pub solver: Option<String>,
    pub witness: Vec<ConstraintTag>,
    /// The witness rows combine to `0 = 1` with exact multipliers.
    pub certified: bool,
}

impl NonexistenceRow {
    pub fn reduction_matches(&self) -> Option<bool> {
        self.reduced
            .as_ref()
            .map(|r| r == &arith::from_integer(self.residual.clone()))
    }

    pub fn passed(&self) -> bool {
        let residual_ok = !self.residual.is_zero();
        let reduction_ok = self.reduction_matches() != Some(false) && (self.m == 0 || self.reduced.is_some());
        let solver_ok = self.m == 0 || (self.solver.as_deref() == Some("inconsistent") && self.certified);
        residual_ok && reduction_ok && solver_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexistenceReport {
    pub t: usize,
    pub polynomial: Polynomial,
    pub rows: Vec<NonexistenceRow>,
}

impl NonexistenceReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(NonexistenceRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &NonexistenceRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

fn row(t: usize, m: usize, poly: &Polynomial) -> NonexistenceRow {
    let p = ParamSet::from_mt(m, t).expect("t is a valid residue");
    let residual = poly.eval(m as i64);
    let gap = alpha_2m1_closed(&p) - beta(&p, 2 * m + 1, 0);
    let reduced = nonexistence_normalizer(t, m)
        .expect("family checked by caller")
        .map(|f| gap * f);
    let (solver, witness, certified) = if m == 0 {
        (None, Vec::new(), false)
    } else {
        let sys = build_constraints(&p, true);
        match sys.solve() {
            SolveOutcome::Inconsistent { witness, .. } => {
                let certified = sys.certificate(&witness).is_some_and(|c| c.verify(&sys));
                (Some("inconsistent".to_string()), witness, certified)
            }
            other => (Some(other.label()), Vec::new(), false),
        }
    };
    NonexistenceRow {
        m,
        n: p.n,
        residual,
        reduced,
        solver,
        witness,
        certified,
    }
}

/// Evaluates the polynomial, its reduction from `alpha` and `beta`, and the
/// solver verdict for every `0 <= m <= m_max`.
pub fn check_nonexistence(t: usize, m_max: usize) -> Result<NonexistenceReport, TheoremError> {
    let polynomial = nonexistence_polynomial(t)?;
    if m_max < 1 {
        return Err(TheoremError::RangeTooSmall { min: 1, got: m_max });
    }
    let rows = (0..=m_max)
        .into_par_iter()
        .map(|m| row(t, m, &polynomial))
        .collect();
    Ok(NonexistenceReport { t, polynomial, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        assert_eq!(nonexistence_polynomial(1).unwrap().eval(1), BigInt::from(75));
        for m in 0..50 {
            assert!(nonexistence_polynomial(5).unwrap().eval(m) >= BigInt::from(3));
        }
        assert!(nonexistence_polynomial(4).is_err());
    }

    #[test]
    fn reduction_matches_independent_evaluation() {
        // 24m^2 + 14m + 1 evaluated with plain integers
        for m in 1..=100usize {
            let p = ParamSet::from_mt(m, 2).unwrap();
            let gap = alpha_2m1_closed(&p) - beta(&p, 2 * m + 1, 0);
            let f = nonexistence_normalizer(2, m).unwrap().unwrap();
            let mi = m as i64;
            assert_eq!(gap * f, arith::int(24 * mi * mi + 14 * mi + 1), "m={m}");
        }
        assert_eq!(nonexistence_normalizer(1, 0).unwrap(), None);
        assert!(nonexistence_normalizer(5, 0).unwrap().is_some());
    }

    #[test]
    fn small_scan_passes() {
        for t in NONEXISTENT_FAMILIES {
            let r = check_nonexistence(t, 6).unwrap();
            assert!(r.passed(), "t={t}: {:?}", r.failures().next());
            assert_eq!(r.rows.len(), 7);
            assert!(r.rows[1].certified);
        }
        assert_eq!(
            check_nonexistence(1, 0),
            Err(TheoremError::RangeTooSmall { min: 1, got: 0 })
        );
    }
}
