//! Closed forms and scans for the nonexistence equations, the explicit
//! length bounds and the closing summary table.
//!
//! Stored constants (polynomials, thresholds) are expectations; the solver
//! is the ground truth they are checked against.

mod bounds;
mod nonexistence;
mod summary;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

pub use bounds::{
    b_closed_form, b_via_alpha_beta, bound_polynomial, parity_condition, threshold_scan, ScanMode,
    ShadowIndex, SolverPoint, ThresholdRecord, BOUNDED_FAMILIES, DOUBLY_EVEN_BOUNDS,
};
pub use nonexistence::{
    check_nonexistence, nonexistence_normalizer, nonexistence_polynomial, NonexistenceReport,
    NonexistenceRow, NONEXISTENT_FAMILIES,
};
pub use summary::{summary, FamilyStatus, Summary, SummaryRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("{op} is not defined for t = {t}")]
    UnsupportedFamily { op: &'static str, t: usize },
    #[error("{index} has no closed form for t = {t}")]
    UnsupportedIndex { t: usize, index: ShadowIndex },
    #[error("closed form for {index} at t = {t} is undefined at m = {m}")]
    Undefined { t: usize, index: ShadowIndex, m: usize },
    #[error("m_max must be at least {min}, got {got}")]
    RangeTooSmall { min: usize, got: usize },
}

/// Integer polynomial in `m`, coefficients in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: &[i64]) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, m: i64) -> BigInt {
        let m = BigInt::from(m);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &m + c)
    }

    /// Smallest `m` in `from..=to` where the value is negative.
    pub fn first_negative(&self, from: usize, to: usize) -> Option<usize> {
        (from..=to).find(|&m| self.eval(m as i64).is_negative())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag == BigInt::from(1) && deg > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("m")?,
                _ => write!(f, "m^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
