//! Extremal plus minimal-shadow conditions as a linear system in the basis
//! coefficients `c_0..c_k`, its exact solution, the reconstructed
//! enumerators and the shadow screen.

mod elim;
mod enumerator;
mod screen;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{self, Rational};
use crate::gleason::{self, ParamSet};

pub use elim::{solve_rows, Certificate, SolveOutcome};
pub use enumerator::{enumerators_from_c, shadow_transform, WeightEnumerator};
pub use screen::{classify, screen, Check, CheckResult, Classification, ScreenReport, Verdict};

/// Which coefficient condition a row encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintTag {
    /// Coefficient `a_j` of `y^(2j)` in `W`.
    WeightCoeff(usize),
    /// Coefficient `b_j` of `y^(4j+r)` in `S`.
    ShadowCoeff(usize),
}

impl fmt::Display for ConstraintTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstraintTag::WeightCoeff(j) => write!(f, "a_{j}"),
            ConstraintTag::ShadowCoeff(j) => write!(f, "b_{j}"),
        }
    }
}

/// One row `sum_i coeffs[i] c_i = rhs`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub tag: ConstraintTag,
    pub coeffs: BTreeMap<usize, Rational>,
    pub rhs: Rational,
}

impl Constraint {
    pub fn dense(&self, len: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); len];
        for (i, c) in &self.coeffs {
            v[*i] = c.clone();
        }
        v
    }

    /// `sum_i coeffs[i] x_i - rhs`.
    pub fn residual(&self, x: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .fold(-self.rhs.clone(), |acc, (i, c)| acc + c * &x[*i])
    }
}

#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub params: ParamSet,
    pub num_unknowns: usize,
    pub rows: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("the system has no solution")]
    Inconsistent,
    #[error("the solution is a {0}-parameter family, so the value is not determined")]
    NotUnique(usize),
    #[error("expected {expected} basis coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// Coefficient conditions for an extremal code of the given length whose
/// shadow has the smallest possible minimum weight.
///
/// * `a_0 = 1` and `a_j = 0` for `1 <= j <= d/2 - 1`;
/// * `r > 0`, `m >= 1`: `b_0 = 1`, `b_j = 0` for `1 <= j <= m-1`, and with
///   `with_weight_one_row` and `r = 1` also `b_m = 0`;
/// * `r = 0`: `b_0 = 0`, and for `m >= 2` also `b_1 = 1`, `b_j = 0` for
///   `2 <= j <= m-1`.
///
/// For `m = 0` and `r > 0` only the `a`-rows are used; the shadow is checked
/// afterwards by [`screen`].
pub fn build_constraints(p: &ParamSet, with_weight_one_row: bool) -> ConstraintSystem {
    let k = p.k();
    let a_max = p.d / 2 - 1;
    let mut rows = Vec::new();

    let columns: Vec<Vec<arith::Integer>> = (0..=k.min(a_max))
        .map(|i| gleason::basis_w_column(p, i, a_max + 1))
        .collect();
    for j in 0..=a_max {
        let coeffs = columns
            .iter()
            .enumerate()
            .filter(|(_, col)| !col[j].is_zero())
            .map(|(i, col)| (i, arith::from_integer(col[j].clone())))
            .collect();
        let rhs = if j == 0 { Rational::one() } else { Rational::zero() };
        rows.push(Constraint {
            tag: ConstraintTag::WeightCoeff(j),
            coeffs,
            rhs,
        });
    }

    let mut shadow = |j: usize, v: i64| {
        let coeffs = (0..=k)
            .filter_map(|i| gleason::shadow_entry(p, j, i).map(|c| (i, c)))
            .collect();
        rows.push(Constraint {
            tag: ConstraintTag::ShadowCoeff(j),
            coeffs,
            rhs: arith::int(v),
        });
    };
    let m = p.m;
    if p.r > 0 {
        if m >= 1 {
            shadow(0, 1);
            for j in 1..m {
                shadow(j, 0);
            }
            if with_weight_one_row && p.r == 1 {
                shadow(m, 0);
            }
        }
    } else {
        shadow(0, 0);
        if m >= 2 {
            shadow(1, 1);
            for j in 2..m {
                shadow(j, 0);
            }
        }
    }

    ConstraintSystem {
        params: *p,
        num_unknowns: k + 1,
        rows,
    }
}

impl ConstraintSystem {
    pub fn solve(&self) -> SolveOutcome {
        solve_rows(self.num_unknowns, &self.rows)
    }

    pub fn tags(&self) -> Vec<ConstraintTag> {
        self.rows.iter().map(|r| r.tag).collect()
    }

    /// True when `x` satisfies every row exactly.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.num_unknowns && self.rows.iter().all(|r| r.residual(x).is_zero())
    }

    /// Multipliers for the rows in `witness` whose combination reads
    /// `0 = 1`. `None` if those rows are consistent.
    pub fn certificate(&self, witness: &[ConstraintTag]) -> Option<Certificate> {
        elim::certificate(self, witness)
    }
}

/// `a_j = [y^(2j)] W` from the basis coefficients.
pub fn weight_coefficient(p: &ParamSet, c: &[Rational], j: usize) -> Rational {
    let mut acc = Rational::zero();
    for (i, ci) in c.iter().enumerate().take(j + 1) {
        if ci.is_zero() {
            continue;
        }
        let col = gleason::basis_w_column(p, i, j + 1);
        acc += ci * arith::from_integer(col[j].clone());
    }
    acc
}

/// `b_j = [y^(4j+r)] S` from the basis coefficients.
pub fn shadow_coefficient_of(p: &ParamSet, c: &[Rational], j: usize) -> Rational {
    c.iter()
        .enumerate()
        .filter_map(|(i, ci)| gleason::shadow_entry(p, j, i).map(|e| e * ci))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `b_j` read off a solved system; only a unique solution determines it.
pub fn shadow_coefficient(p: &ParamSet, outcome: &SolveOutcome, j: usize) -> Result<Rational, SolverError> {
    match outcome {
        SolveOutcome::Unique { c } => {
            if c.len() != p.num_unknowns() {
                return Err(SolverError::WrongLength {
                    expected: p.num_unknowns(),
                    got: c.len(),
                });
            }
            Ok(shadow_coefficient_of(p, c, j))
        }
        SolveOutcome::Family { dimension, .. } => Err(SolverError::NotUnique(*dimension)),
        SolveOutcome::Inconsistent { .. } => Err(SolverError::Inconsistent),
    }
}

/// Solves the standard system (with the weight-one row) for length `n`.
pub fn solve_length(p: &ParamSet) -> SolveOutcome {
    build_constraints(p, true).solve()
}
