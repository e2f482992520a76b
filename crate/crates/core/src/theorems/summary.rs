use std::fmt;

use rayon::prelude::*;

use crate::gleason::ParamSet;
use crate::solver::{classify, Verdict};

use super::{
    check_nonexistence, nonexistence_polynomial, parity_condition, threshold_scan, ScanMode,
    BOUNDED_FAMILIES, DOUBLY_EVEN_BOUNDS, NONEXISTENT_FAMILIES,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyStatus {
    /// No extremal code with minimal shadow for any `m`.
    Nonexistent,
    /// None for `m >= m_min`, from a negative shadow coefficient.
    Bounded { m_min: usize },
    /// None for `m >= m_min`, from the stored doubly-even bound.
    BoundedDoublyEven { m_min: usize },
    /// The enumerator is not determined.
    Open,
}

impl FamilyStatus {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyStatus::Nonexistent => "nonexistent",
            FamilyStatus::Bounded { .. } | FamilyStatus::BoundedDoublyEven { .. } => "bounded",
            FamilyStatus::Open => "open",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummaryRow {
    pub t: usize,
    pub status: FamilyStatus,
    pub detail: String,
    /// The row's claim was re-checked for `m <= m_max`.
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub m_max: usize,
    pub rows: Vec<SummaryRow>,
    pub notes: Vec<String>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verified)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>2}  {:<8}  {:<11}  {:<8}  detail", "t", "length", "status", "checked")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>2}  {:<8}  {:<11}  {:<8}  {}",
                r.t,
                format!("24m+{}", 2 * r.t),
                r.status.label(),
                if r.verified { "ok" } else { "FAILED" },
                r.detail
            )?;
        }
        writeln!(f, "checked range: 0 <= m <= {}", self.m_max)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

fn all_m(from: usize, m_max: usize, t: usize, pred: impl Fn(&Verdict) -> bool + Sync) -> bool {
    (from..=m_max).into_par_iter().all(|m| {
        let p = ParamSet::from_mt(m, t).expect("valid residue");
        pred(&classify(&p).verdict)
    })
}

fn row(t: usize, m_max: usize) -> SummaryRow {
    if NONEXISTENT_FAMILIES.contains(&t) {
        let poly = nonexistence_polynomial(t).expect("listed family");
        let verified = check_nonexistence(t, m_max).is_ok_and(|r| r.passed());
        return SummaryRow {
            t,
            status: FamilyStatus::Nonexistent,
            detail: format!("{poly} = 0 has no root m >= 0"),
            verified,
        };
    }
    if let Some((_, index, star)) = BOUNDED_FAMILIES.iter().find(|(ft, _, _)| *ft == t) {
        let verified = threshold_scan(t, m_max.max(*star), ScanMode::Bracket).is_ok_and(|r| r.passed());
        return SummaryRow {
            t,
            status: FamilyStatus::Bounded { m_min: *star },
            detail: format!("none for m >= {star}: {index} < 0"),
            verified,
        };
    }
    match t {
        8 => {
            let m_min = DOUBLY_EVEN_BOUNDS[2].1;
            SummaryRow {
                t,
                status: FamilyStatus::BoundedDoublyEven { m_min },
                detail: format!("none for m >= {m_min}: via doubly-even bound (stored)"),
                verified: true,
            }
        }
        10 => SummaryRow {
            t,
            status: FamilyStatus::Open,
            detail: "open: enumerator not unique".into(),
            verified: all_m(1, m_max, t, |v| matches!(v, Verdict::Family { dimension: 1 })),
        },
        11 => SummaryRow {
            t,
            status: FamilyStatus::Nonexistent,
            detail: "shadow coefficient of y^(4m+3) is negative".into(),
            verified: all_m(0, m_max, t, Verdict::is_nonexistent),
        },
        _ => unreachable!("t = {t} is not summarised"),
    }
}

/// One row per residue class `n = 24m + 2t`, `1 <= t <= 11`, each re-checked
/// for `m <= m_max`.
pub fn summary(m_max: usize) -> Summary {
    let rows = (1..=11).into_par_iter().map(|t| row(t, m_max.max(1))).collect();
    let (_, _, star4) = BOUNDED_FAMILIES[0];
    let parity: Vec<String> = (1..star4)
        .filter(|&m| parity_condition(m))
        .map(|m| m.to_string())
        .collect();
    let notes = vec![format!(
        "t=4: m even with C(5m,m) odd also excludes m in {{{}}} below {star4} (stored, not checked)",
        parity.join(", ")
    )];
    Summary {
        m_max: m_max.max(1),
        rows,
        notes,
    }
}
