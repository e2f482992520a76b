//! Gleason-type bases for the weight enumerator `W` of a singly-even
//! self-dual code and for the enumerator `S` of its shadow, together with
//! the change-of-basis coefficients `alpha` and `beta`.
//!
//! With `N = n/2` and `k = floor(n/8)`:
//!
//! ```text
//! W(y) = sum_i c_i (1+y^2)^(N-4i) (y^2 (1-y^2)^2)^i
//! S(y) = sum_i c_i (-1)^i 2^(N-6i) y^(N-4i) (1-y^4)^(2i)
//! ```
//!
//! `a_j` is the coefficient of `y^(2j)` in `W`, `b_j` the coefficient of
//! `y^(4j+r)` in `S`.

mod alpha;
mod beta;
mod matrix;
pub mod tables;

use std::fmt;

use thiserror::Error;

use crate::arith::{self, Rational};
use crate::series::{self, Series, Sign};

pub use alpha::{alpha_2m1_closed, alpha_2m_closed, alpha_direct};
pub use beta::{basis_matrices, beta, BasisMatrices};
pub(crate) use beta::shadow_entry;
pub use matrix::{Matrix, SingularMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("length must be a positive even integer, got {0}")]
    BadLength(usize),
    #[error("residue parameter t must be in 0..=11, got {0}")]
    BadResidue(usize),
    #[error("basis index {i} out of range 0..={k}")]
    IndexOutOfRange { i: usize, k: usize },
}

/// Length decomposition `n = 24m + 8l + 2r`, `t = 4l + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamSet {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub r: usize,
    pub t: usize,
    /// Largest possible minimum distance of a self-dual code of length `n`.
    pub d: usize,
}

impl ParamSet {
    pub fn new(n: usize) -> Result<Self, ParamError> {
        if n == 0 || n % 2 == 1 {
            return Err(ParamError::BadLength(n));
        }
        let m = n / 24;
        let t = (n % 24) / 2;
        let d = if t == 11 { 4 * m + 6 } else { 4 * m + 4 };
        Ok(ParamSet {
            n,
            m,
            l: t / 4,
            r: t % 4,
            t,
            d,
        })
    }

    pub fn from_mt(m: usize, t: usize) -> Result<Self, ParamError> {
        if t > 11 {
            return Err(ParamError::BadResidue(t));
        }
        Self::new(24 * m + 2 * t)
    }

    /// `N = n/2 = 12m + 4l + r`.
    pub fn half(&self) -> usize {
        self.n / 2
    }

    /// `k = 3m + l`, the largest basis index.
    pub fn k(&self) -> usize {
        3 * self.m + self.l
    }

    pub fn num_unknowns(&self) -> usize {
        self.k() + 1
    }

    pub fn basis_index(&self, i: usize) -> Result<BasisIndex, ParamError> {
        BasisIndex::new(self, i)
    }

    /// Degree in `S` that carries `b_j`.
    pub fn shadow_degree(&self, j: usize) -> usize {
        4 * j + self.r
    }

    /// Smallest shadow weight a code of this length can have.
    pub fn minimal_shadow_weight(&self) -> usize {
        if self.r == 0 {
            4
        } else {
            self.r
        }
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} (m={}, l={}, r={}, t={}, d={})",
            self.n, self.m, self.l, self.r, self.t, self.d
        )
    }
}

/// A basis index `i` with `0 <= i <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex(usize);

impl BasisIndex {
    pub fn new(p: &ParamSet, i: usize) -> Result<Self, ParamError> {
        if i > p.k() {
            return Err(ParamError::IndexOutOfRange { i, k: p.k() });
        }
        Ok(BasisIndex(i))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// `(1+y^2)^(N-4i) y^(2i) (1-y^2)^(2i)`.
pub fn basis_w(p: &ParamSet, i: BasisIndex, trunc: usize) -> Series {
    let i = i.get();
    let body = Series::binomial_pair((p.half() - 4 * i) as u64, 2 * i as u64, 2, trunc);
    body.scale_shift(&arith::int(1), 2 * i)
}

/// `(-1)^i 2^(N-6i) y^(N-4i) (1-y^4)^(2i)`.
pub fn basis_s(p: &ParamSet, i: BasisIndex, trunc: usize) -> Series {
    let i = i.get();
    let body = Series::from_binomial_power(Sign::Minus, 2 * i as u64, 4, trunc);
    body.scale_shift(&basis_s_factor(p, i), p.half() - 4 * i)
}

/// `(-1)^i 2^(N-6i)`, the scalar in front of the `i`-th shadow basis term.
pub fn basis_s_factor(p: &ParamSet, i: usize) -> Rational {
    arith::pow2(p.half() as i64 - 6 * i as i64) * arith::int(arith::sign_pow(i as i64))
}

/// `[y^(2j)] basis_w(i)` for `j = 0..len`, as integers.
pub(crate) fn basis_w_column(p: &ParamSet, i: usize, len: usize) -> Vec<arith::Integer> {
    let mut col = vec![arith::Integer::from(0); i.min(len)];
    if len > i {
        col.extend(series::binomial_pair_coeffs(
            (p.half() - 4 * i) as u64,
            2 * i as u64,
            len - i,
        ));
    }
    col
}
