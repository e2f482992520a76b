//! Necessary conditions on a predicted pair `(W, S)`: integrality,
//! nonnegativity, totals, and the standard restrictions on the shadow
//! enumerator of a singly-even self-dual code.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{self, Rational};
use crate::gleason::ParamSet;

use super::{build_constraints, enumerators_from_c, ConstraintTag, SolveOutcome, WeightEnumerator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    WeightIntegral,
    WeightNonnegative,
    WeightTotal,
    /// `A_0 = 1` and `A_w = 0` for `0 < w < d`.
    WeightExtremal,
    ShadowIntegral,
    ShadowNonnegative,
    ShadowTotal,
    /// `B_w = B_(n-w)`.
    ShadowSymmetric,
    /// `B_w = 0` unless `w = n/2 (mod 4)`.
    ShadowSupport,
    /// `B_0 = 0`.
    ShadowNoZeroWord,
    /// `B_w <= 1` for `w < d/2`.
    ShadowBelowHalfDistance,
    /// `B_(d/2) <= 2n/d`.
    ShadowAtHalfDistance,
    /// At most one `B_w` is nonzero for `w < (d+4)/2`.
    ShadowSingleLowTerm,
    /// The smallest shadow weight is `r`, or 4 when `r = 0`.
    MinimalShadow,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::WeightIntegral,
        Check::WeightNonnegative,
        Check::WeightTotal,
        Check::WeightExtremal,
        Check::ShadowIntegral,
        Check::ShadowNonnegative,
        Check::ShadowTotal,
        Check::ShadowSymmetric,
        Check::ShadowSupport,
        Check::ShadowNoZeroWord,
        Check::ShadowBelowHalfDistance,
        Check::ShadowAtHalfDistance,
        Check::ShadowSingleLowTerm,
        Check::MinimalShadow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::WeightIntegral => "W integral",
            Check::WeightNonnegative => "W nonnegative",
            Check::WeightTotal => "W(1) = 2^(n/2)",
            Check::WeightExtremal => "W extremal",
            Check::ShadowIntegral => "S integral",
            Check::ShadowNonnegative => "S nonnegative",
            Check::ShadowTotal => "S(1) = 2^(n/2)",
            Check::ShadowSymmetric => "B_w = B_(n-w)",
            Check::ShadowSupport => "B_w = 0 unless w = n/2 mod 4",
            Check::ShadowNoZeroWord => "B_0 = 0",
            Check::ShadowBelowHalfDistance => "B_w <= 1 for w < d/2",
            Check::ShadowAtHalfDistance => "B_(d/2) <= 2n/d",
            Check::ShadowSingleLowTerm => "one B_w for w < (d+4)/2",
            Check::MinimalShadow => "minimal shadow weight",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: Check,
    pub passed: bool,
    /// Smallest offending weight, when the failure is tied to one.
    pub weight: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenReport {
    pub params: ParamSet,
    pub results: Vec<CheckResult>,
}

impl ScreenReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_violation(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| !r.passed)
    }

    pub fn get(&self, check: Check) -> &CheckResult {
        self.results
            .iter()
            .find(|r| r.check == check)
            .expect("every check is evaluated")
    }
}

fn first_failing(w: &WeightEnumerator, pred: impl Fn(usize, &Rational) -> bool) -> Option<usize> {
    w.terms().find(|(wt, c)| !pred(*wt, c)).map(|(wt, _)| wt)
}

/// Runs every check on `(W, S)`.
pub fn screen(p: &ParamSet, w: &WeightEnumerator, s: &WeightEnumerator) -> ScreenReport {
    let n = p.n;
    let d = p.d;
    let size = arith::pow2(p.half() as i64);
    let mut results = Vec::with_capacity(Check::ALL.len());
    let mut push = |check: Check, bad: Option<usize>, ok: bool| {
        results.push(CheckResult {
            check,
            passed: ok && bad.is_none(),
            weight: bad,
        });
    };

    push(Check::WeightIntegral, first_failing(w, |_, c| arith::is_integral(c)), true);
    push(Check::WeightNonnegative, first_failing(w, |_, c| !c.is_negative()), true);
    push(Check::WeightTotal, None, w.total() == size);
    let extremal_bad = (0..d).find(|&wt| {
        let c = w.coeff(wt);
        if wt == 0 {
            c != arith::int(1)
        } else {
            !c.is_zero()
        }
    });
    push(Check::WeightExtremal, extremal_bad, true);

    push(Check::ShadowIntegral, first_failing(s, |_, c| arith::is_integral(c)), true);
    push(Check::ShadowNonnegative, first_failing(s, |_, c| !c.is_negative()), true);
    push(Check::ShadowTotal, None, s.total() == size);
    push(
        Check::ShadowSymmetric,
        (0..=n).find(|&wt| s.coeff(wt) != s.coeff(n - wt)),
        true,
    );
    push(
        Check::ShadowSupport,
        first_failing(s, |wt, _| wt % 4 == p.half() % 4),
        true,
    );
    push(Check::ShadowNoZeroWord, (!s.coeff(0).is_zero()).then_some(0), true);
    push(
        Check::ShadowBelowHalfDistance,
        (0..d.div_ceil(2)).find(|&wt| s.coeff(wt) > arith::int(1)),
        true,
    );
    let at_half = if d.is_multiple_of(2) {
        let b = s.coeff(d / 2);
        (b * arith::int(d as i64) > arith::int(2 * n as i64)).then_some(d / 2)
    } else {
        None
    };
    push(Check::ShadowAtHalfDistance, at_half, true);
    let low: Vec<usize> = (0..(d + 4).div_ceil(2))
        .filter(|&wt| !s.coeff(wt).is_zero())
        .collect();
    push(Check::ShadowSingleLowTerm, low.get(1).copied(), true);
    let min = s.min_weight(false);
    let minimal_ok = min == Some(p.minimal_shadow_weight());
    push(Check::MinimalShadow, if minimal_ok { None } else { min }, minimal_ok);

    ScreenReport {
        params: *p,
        results,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The coefficient conditions have no solution.
    NoSolution { witness: Vec<ConstraintTag> },
    /// A unique enumerator exists but fails `check`.
    ScreenFailure { check: Check, weight: Option<usize> },
    /// A unique enumerator that passes every check.
    Unique,
    /// The enumerator is not determined.
    Family { dimension: usize },
}

impl Verdict {
    pub fn is_nonexistent(&self) -> bool {
        matches!(self, Verdict::NoSolution { .. } | Verdict::ScreenFailure { .. })
    }

    /// Short label for grids.
    pub fn label(&self) -> String {
        match self {
            Verdict::NoSolution { .. } => "none:system".into(),
            Verdict::ScreenFailure { .. } => "none:screen".into(),
            Verdict::Unique => "unique".into(),
            Verdict::Family { dimension } => format!("family({dimension})"),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NoSolution { witness } => {
                let tags: Vec<String> = witness.iter().map(|t| t.to_string()).collect();
                write!(f, "nonexistent: conditions {} are inconsistent", tags.join(", "))
            }
            Verdict::ScreenFailure { check, weight } => match weight {
                Some(w) => write!(f, "nonexistent: '{check}' fails at weight {w}"),
                None => write!(f, "nonexistent: '{check}' fails"),
            },
            Verdict::Unique => write!(f, "unique enumerator, all checks pass"),
            Verdict::Family { dimension } => {
                write!(f, "enumerator not unique ({dimension}-parameter family)")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub params: ParamSet,
    pub outcome: SolveOutcome,
    /// Present exactly when the outcome is unique.
    pub enumerators: Option<(WeightEnumerator, WeightEnumerator)>,
    pub screen: Option<ScreenReport>,
    pub verdict: Verdict,
}

/// Solves the standard system for `p`, rebuilds the enumerators of a unique
/// solution and screens them.
pub fn classify(p: &ParamSet) -> Classification {
    let outcome = build_constraints(p, true).solve();
    let (enumerators, screen_report, verdict) = match &outcome {
        SolveOutcome::Inconsistent { witness, .. } => (
            None,
            None,
            Verdict::NoSolution {
                witness: witness.clone(),
            },
        ),
        SolveOutcome::Family { dimension, .. } => (
            None,
            None,
            Verdict::Family {
                dimension: *dimension,
            },
        ),
        SolveOutcome::Unique { c } => {
            let (w, s) = enumerators_from_c(p, c).expect("solution length matches");
            let report = screen(p, &w, &s);
            let verdict = match report.first_violation() {
                Some(v) => Verdict::ScreenFailure {
                    check: v.check,
                    weight: v.weight,
                },
                None => Verdict::Unique,
            };
            (Some((w, s)), Some(report), verdict)
        }
    };
    Classification {
        params: *p,
        outcome,
        enumerators,
        screen: screen_report,
        verdict,
    }
}
