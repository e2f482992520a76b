//! Exact sparse Gaussian elimination with deterministic pivoting: columns in
//! increasing order, and within a column the unused row of smallest index.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{self, Rational};

use super::{Constraint, ConstraintSystem, ConstraintTag};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Some combination of the rows reads `0 = residual` with a nonzero
    /// residual (up to scaling). `witness` lists the rows that went into it.
    Inconsistent {
        witness: Vec<ConstraintTag>,
        residual: Rational,
    },
    Unique {
        c: Vec<Rational>,
    },
    /// `particular + sum_f lambda_f basis[f]` for arbitrary `lambda`.
    Family {
        dimension: usize,
        particular: Vec<Rational>,
        basis: Vec<Vec<Rational>>,
    },
}

impl SolveOutcome {
    pub fn label(&self) -> String {
        match self {
            SolveOutcome::Inconsistent { .. } => "inconsistent".into(),
            SolveOutcome::Unique { .. } => "unique".into(),
            SolveOutcome::Family { dimension, .. } => format!("family({dimension})"),
        }
    }

    pub fn unique(&self) -> Option<&[Rational]> {
        match self {
            SolveOutcome::Unique { c } => Some(c),
            _ => None,
        }
    }
}

/// A row scaled to integers: `sum coeffs[i] x_i = rhs`.
struct Row {
    coeffs: BTreeMap<usize, BigInt>,
    rhs: BigInt,
    origin: FixedBitSet,
}

impl Row {
    fn from_constraint(c: &Constraint, idx: usize, n_rows: usize) -> Row {
        let d = arith::common_denominator(c.coeffs.values().chain(std::iter::once(&c.rhs)));
        let scale = |v: &Rational| v.numer() * (&d / v.denom());
        let mut origin = FixedBitSet::with_capacity(n_rows);
        origin.insert(idx);
        Row {
            coeffs: c.coeffs.iter().map(|(i, v)| (*i, scale(v))).collect(),
            rhs: scale(&c.rhs),
            origin,
        }
    }

    /// Removes column `col` using `pivot`, whose entry there is `pc`:
    /// `self = (pc/g) self - (a/g) pivot` with `g = gcd(pc, a)`.
    fn eliminate(&mut self, col: usize, pivot: &Row, pc: &BigInt) {
        let Some(a) = self.coeffs.remove(&col) else {
            return;
        };
        let (mul_self, mul_pivot) = if pc.is_one() {
            (None, a)
        } else {
            let g = pc.gcd(&a);
            (Some(pc / &g), a / g)
        };
        if let Some(f) = &mul_self {
            for v in self.coeffs.values_mut() {
                *v *= f;
            }
            self.rhs *= f;
        }
        for (c, v) in pivot.coeffs.range(col + 1..) {
            let slot = self.coeffs.entry(*c).or_insert_with(BigInt::zero);
            *slot -= &mul_pivot * v;
            if slot.is_zero() {
                self.coeffs.remove(c);
            }
        }
        self.rhs -= &mul_pivot * &pivot.rhs;
        self.origin.union_with(&pivot.origin);
        if mul_self.is_some() {
            self.remove_content();
        }
    }

    fn remove_content(&mut self) {
        let g = self
            .coeffs
            .values()
            .fold(self.rhs.abs(), |g, v| g.gcd(v));
        if g.is_zero() || g.is_one() {
            return;
        }
        for v in self.coeffs.values_mut() {
            *v /= &g;
        }
        self.rhs /= &g;
    }
}

/// Solves `rows` over `num_unknowns` unknowns.
///
/// Rows are scaled to integers and eliminated without division, so the
/// common case of unit pivots costs no gcd computations at all.
pub fn solve_rows(num_unknowns: usize, rows: &[Constraint]) -> SolveOutcome {
    let n_rows = rows.len();
    let mut work: Vec<Row> = rows
        .iter()
        .enumerate()
        .map(|(idx, r)| Row::from_constraint(r, idx, n_rows))
        .collect();
    let mut used = vec![false; n_rows];
    let mut pivots: Vec<(usize, usize)> = Vec::new();

    for col in 0..num_unknowns {
        let Some(pr) = (0..n_rows).find(|&r| !used[r] && work[r].coeffs.contains_key(&col)) else {
            continue;
        };
        used[pr] = true;
        pivots.push((col, pr));
        let pivot_row = std::mem::replace(
            &mut work[pr],
            Row {
                coeffs: BTreeMap::new(),
                rhs: BigInt::zero(),
                origin: FixedBitSet::new(),
            },
        );
        let pc = pivot_row.coeffs[&col].clone();
        for r in 0..n_rows {
            if !used[r] {
                work[r].eliminate(col, &pivot_row, &pc);
            }
        }
        work[pr] = pivot_row;
    }

    // every unused row is now empty on the left
    if let Some(bad) = (0..n_rows).find(|&r| !used[r] && !work[r].rhs.is_zero()) {
        return SolveOutcome::Inconsistent {
            witness: work[bad].origin.ones().map(|i| rows[i].tag).collect(),
            residual: arith::from_integer(work[bad].rhs.clone()),
        };
    }

    let pivot_cols: Vec<bool> = {
        let mut v = vec![false; num_unknowns];
        for (c, _) in &pivots {
            v[*c] = true;
        }
        v
    };
    let free: Vec<usize> = (0..num_unknowns).filter(|c| !pivot_cols[*c]).collect();

    // Values are kept as numerators over one shared denominator, the lcm of
    // the reduced denominators so far; each pivot costs two gcds.
    let back_substitute = |seed: Option<usize>, with_rhs: bool| -> Vec<Rational> {
        let mut den = BigInt::one();
        let mut num = vec![BigInt::zero(); num_unknowns];
        if let Some(f) = seed {
            num[f] = BigInt::one();
        }
        for &(col, r) in pivots.iter().rev() {
            let row = &work[r];
            let mut acc = if with_rhs { &row.rhs * &den } else { BigInt::zero() };
            for (c, coeff) in row.coeffs.range(col + 1..) {
                if !num[*c].is_zero() {
                    acc -= coeff * &num[*c];
                }
            }
            if acc.is_zero() {
                continue;
            }
            // value = acc / (pc * den), reduced to a / q
            let full = &row.coeffs[&col] * &den;
            let g = acc.gcd(&full);
            let (mut a, mut q) = (acc / &g, full / g);
            if q.is_negative() {
                a = -a;
                q = -q;
            }
            let scale = &q / q.gcd(&den);
            if !scale.is_one() {
                for v in num.iter_mut().filter(|v| !v.is_zero()) {
                    *v *= &scale;
                }
                den *= &scale;
            }
            num[col] = a * (&den / q);
        }
        num.into_iter()
            .map(|v| Rational::new(v, den.clone()))
            .collect()
    };

    let particular = back_substitute(None, true);
    if free.is_empty() {
        return SolveOutcome::Unique { c: particular };
    }
    let basis = free
        .iter()
        .map(|&f| back_substitute(Some(f), false))
        .collect();
    SolveOutcome::Family {
        dimension: free.len(),
        particular,
        basis,
    }
}

/// Multipliers `lambda` with `sum lambda_r row_r = 0` on the left and
/// `sum lambda_r rhs_r = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub multipliers: Vec<(ConstraintTag, Rational)>,
}

impl Certificate {
    /// Recombines the rows of `sys` and checks the result is `0 = 1`.
    ///
    /// Rows and multipliers are scaled to integers first so the sum needs
    /// no rational arithmetic.
    pub fn verify(&self, sys: &ConstraintSystem) -> bool {
        let mut scaled = Vec::with_capacity(self.multipliers.len());
        for (tag, lambda) in &self.multipliers {
            let Some(row) = sys.rows.iter().find(|r| r.tag == *tag) else {
                return false;
            };
            let d = arith::common_denominator(row.coeffs.values().chain(std::iter::once(&row.rhs)));
            // lambda * row = (lambda / d) * (d * row)
            scaled.push((lambda / arith::from_integer(d.clone()), row, d));
        }
        let e = arith::common_denominator(scaled.iter().map(|s| &s.0));
        let mut lhs: BTreeMap<usize, BigInt> = BTreeMap::new();
        let mut rhs = BigInt::zero();
        let ints = |v: &Rational, d: &BigInt| v.numer() * (d / v.denom());
        for (mu, row, d) in &scaled {
            let m = mu.numer() * (&e / mu.denom());
            for (c, v) in &row.coeffs {
                *lhs.entry(*c).or_insert_with(BigInt::zero) += &m * ints(v, d);
            }
            rhs += &m * ints(&row.rhs, d);
        }
        lhs.values().all(Zero::is_zero) && rhs == e
    }
}

pub(super) fn certificate(sys: &ConstraintSystem, witness: &[ConstraintTag]) -> Option<Certificate> {
    let chosen: Vec<&Constraint> = witness
        .iter()
        .filter_map(|t| sys.rows.iter().find(|r| r.tag == *t))
        .collect();
    // transposed system: one unknown per chosen row
    let mut t_rows: Vec<Constraint> = Vec::new();
    for col in 0..sys.num_unknowns {
        let coeffs: BTreeMap<usize, Rational> = chosen
            .iter()
            .enumerate()
            .filter_map(|(u, r)| r.coeffs.get(&col).map(|v| (u, v.clone())))
            .collect();
        if coeffs.is_empty() {
            continue;
        }
        t_rows.push(Constraint {
            tag: ConstraintTag::WeightCoeff(col),
            coeffs,
            rhs: Rational::zero(),
        });
    }
    t_rows.push(Constraint {
        tag: ConstraintTag::ShadowCoeff(0),
        coeffs: chosen
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.rhs.is_zero())
            .map(|(u, r)| (u, r.rhs.clone()))
            .collect(),
        rhs: Rational::one(),
    });
    let lambda = match solve_rows(chosen.len(), &t_rows) {
        SolveOutcome::Inconsistent { .. } => return None,
        SolveOutcome::Unique { c } => c,
        SolveOutcome::Family { particular, .. } => particular,
    };
    Some(Certificate {
        multipliers: chosen
            .iter()
            .zip(lambda)
            .filter(|(_, l)| !l.is_zero())
            .map(|(r, l)| (r.tag, l))
            .collect(),
    })
}
