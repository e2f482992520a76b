//! `beta_{ij}`, the weight of `b_j` in `c_i`, and the basis matrices that
//! map the `c`-vector to the low-order coefficients of `W` and `S`.

use num_traits::Zero;

use crate::arith::{self, binom_nonneg, Rational};

use super::{basis_s_factor, basis_w_column, Matrix, ParamSet, SingularMatrix};

/// `beta_{ij} = (-1)^i 2^(6i-N) ((k-j)/i) C(k+i-j-1, k-i-j)` for `i >= 1`;
/// zero unless `0 <= j <= k - i`.
pub fn beta(p: &ParamSet, i: usize, j: usize) -> Rational {
    assert!(i >= 1, "beta is defined for i >= 1");
    let k = p.k();
    if i > k || j > k - i {
        return Rational::zero();
    }
    let c = binom_nonneg((k + i - j - 1) as u64, (k - i - j) as i64);
    arith::pow2(6 * i as i64 - p.half() as i64)
        * arith::int(arith::sign_pow(i as i64))
        * arith::ratio((k - j) as i64, i as i64)
        * arith::from_integer(c)
}

/// `a = A c` and `b = B c`, both square of size `k + 1`.
///
/// `A[j][i] = [y^(2j)] basis_w(i)` is lower triangular with unit diagonal.
/// `B[j][i] = [y^(4j+r)] basis_s(i)` vanishes unless `i + j >= k`.
#[derive(Debug, Clone)]
pub struct BasisMatrices {
    pub a: Matrix,
    pub b: Matrix,
}

impl BasisMatrices {
    /// `alpha = A^-1`, so `c_i = sum_j alpha_{ij} a_j`.
    pub fn alpha(&self) -> Result<Matrix, SingularMatrix> {
        self.a.inverse()
    }

    /// `beta = B^-1`, so `c_i = sum_j beta_{ij} b_j`.
    pub fn beta(&self) -> Result<Matrix, SingularMatrix> {
        self.b.inverse()
    }
}

pub fn basis_matrices(p: &ParamSet) -> BasisMatrices {
    let size = p.k() + 1;
    let mut a = Matrix::zeros(size, size);
    let mut b = Matrix::zeros(size, size);
    for i in 0..size {
        for (j, v) in basis_w_column(p, i, size).into_iter().enumerate() {
            a[(j, i)] = arith::from_integer(v);
        }
        for j in 0..size {
            if let Some(v) = shadow_entry(p, j, i) {
                b[(j, i)] = v;
            }
        }
    }
    BasisMatrices { a, b }
}

/// `[y^(4j+r)] basis_s(i) = (-1)^i 2^(N-6i) (-1)^s C(2i, s)` with
/// `s = i + j - k`; `None` when the entry is zero.
pub(crate) fn shadow_entry(p: &ParamSet, j: usize, i: usize) -> Option<Rational> {
    let k = p.k();
    if i + j < k || i + j - k > 2 * i {
        return None;
    }
    let s = i + j - k;
    let c = binom_nonneg(2 * i as u64, s as i64) * arith::sign_pow(s as i64);
    Some(basis_s_factor(p, i) * arith::from_integer(c))
}
