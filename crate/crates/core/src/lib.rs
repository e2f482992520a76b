//! Exact weight-enumerator computations for extremal singly-even self-dual
//! binary codes whose shadow has the smallest possible minimum weight.
//!
//! A code of length `n = 24m + 8l + 2r` (`t = 4l + r`) is described by its
//! weight enumerator `W` and shadow enumerator `S`, both fixed by the
//! coefficients `c_0..c_k` of the Gleason basis. Extremality and the minimal
//! shadow give linear conditions on `c`; [`solver`] solves them exactly and
//! screens any unique solution, [`gleason`] holds the basis and the
//! change-of-basis coefficients `alpha` and `beta`, and [`theorems`] turns
//! them into per-family nonexistence checks, length bounds and a summary.
//! [`gf2`] enumerates explicit codes to check all of the above against real
//! codes.
//!
//! Everything is exact: [`arith`] wraps `num-bigint`/`num-rational` and
//! [`series`] truncated power series over it.
//!
//! ```
//! use minshadow::gleason::ParamSet;
//! use minshadow::solver::{classify, Verdict};
//!
//! let c = classify(&ParamSet::new(36).unwrap());
//! assert_eq!(c.verdict, Verdict::Unique);
//! let (w, _) = c.enumerators.unwrap();
//! assert_eq!(w.prefix(2), "1 + 289y^8");
//! ```

pub mod arith;
pub mod cli;
pub mod gf2;
pub mod gleason;
pub mod report;
pub mod series;
pub mod solver;
pub mod theorems;
