//! The `minshadow` command line. [`run`] returns the exit code and the text
//! it would print, so the binary is a thin wrapper and tests need no
//! subprocess.
//!
//! Exit codes: 0 when every verification passes, 1 when one fails, 2 for
//! usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{self, format_rational, Rational};
use crate::gf2::{self, BinaryCode, CodeError};
use crate::gleason::{
    alpha_2m1_closed, alpha_2m_closed, alpha_direct, basis_matrices, beta, tables, ParamSet,
};
use crate::report::{Entry, Report};
use crate::solver::{
    build_constraints, classify, enumerators_from_c, shadow_transform, SolveOutcome, Verdict,
    WeightEnumerator,
};
use crate::theorems::{self, ScanMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "minshadow",
    version,
    about = "Exact weight-enumerator checks for extremal singly-even self-dual codes with minimal shadow"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve for one length and print W, S and the shadow checks.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Verdict for every length 24m + 2t with m <= m-max.
    Classify {
        #[arg(long, default_value_t = 30)]
        m_max: usize,
    },
    /// Nonexistence equation, its reduction and the solver, for t in {1,2,3,5}.
    Nonexistence {
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 30)]
        m_max: usize,
    },
    /// Where the bound-carrying shadow coefficient turns negative, for t in {4,6,7,9}.
    Thresholds {
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 200)]
        m_max: usize,
        /// Run the solver at every m instead of only around the threshold.
        #[arg(long)]
        full: bool,
    },
    /// One row per residue class: nonexistent, bounded or open.
    Summary {
        #[arg(long, default_value_t = 30)]
        m_max: usize,
    },
    /// Properties and shadow decomposition of a code from a generator matrix.
    CodeCheck {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Compare an explicit code's enumerators with the solver's.
    CrossValidate {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// alpha_(i,0) and beta_(i,j) from every available route.
    AlphaBeta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Emitted {
    report: Report,
    text: String,
    /// Forces exit code 2 after printing, for unmet preconditions.
    precondition: Option<String>,
}

impl Emitted {
    fn new(report: Report, text: String) -> Self {
        Emitted {
            report,
            text,
            precondition: None,
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Output {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let result = match cli.command {
        Command::Enumerate { n } => enumerate(n),
        Command::Classify { m_max } => classify_grid(m_max),
        Command::Nonexistence { t, m_max } => nonexistence(t, m_max),
        Command::Thresholds { t, m_max, full } => thresholds(t, m_max, full),
        Command::Summary { m_max } => Ok(summary(m_max)),
        Command::CodeCheck { matrix } => read_code(&matrix).and_then(|c| code_check(&c)),
        Command::CrossValidate { matrix } => read_code(&matrix).and_then(|c| cross_validate(&c)),
        Command::AlphaBeta { n, i, j } => alpha_beta(n, i, j),
    };
    match result {
        Err(msg) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Ok(em) => {
            let stdout = match cli.format {
                Format::Text => em.text,
                Format::Csv => em.report.to_csv(),
                Format::Json => em.report.to_json(),
            };
            let (code, stderr) = match em.precondition {
                Some(msg) => (2, format!("error: {msg}\n")),
                None if em.report.passed => (0, String::new()),
                None => (1, "verification failed\n".to_string()),
            };
            Output { code, stdout, stderr }
        }
    }
}

fn params(n: usize) -> Result<ParamSet, String> {
    ParamSet::new(n).map_err(|e| e.to_string())
}

fn with_coeffs(mut e: Entry, prefix: &str, w: &WeightEnumerator) -> Entry {
    for (wt, c) in w.terms() {
        e = e.value(format!("{prefix}_{wt}"), c);
    }
    e
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `W(1) = S(1) = 2^(n/2)` and `S` equals the transform of `W`.
fn enumerators_consistent(p: &ParamSet, w: &WeightEnumerator, s: &WeightEnumerator) -> bool {
    let size = arith::pow2(p.half() as i64);
    w.total() == size && s.total() == size && &shadow_transform(w) == s
}

fn enumerate(n: usize) -> Result<Emitted, String> {
    let p = params(n)?;
    let sys = build_constraints(&p, true);
    let cls = classify(&p);
    let mut rep = Report::new("enumerate", &[("n", n.to_string())]);
    let mut text = format!("{p}\nverdict: {}\n", cls.verdict);
    let citation = "extremal and minimal-shadow coefficient conditions";
    let subject = format!("n={n}");

    match &cls.outcome {
        SolveOutcome::Inconsistent { witness, .. } => {
            let cert = sys.certificate(witness);
            let ok = cert.as_ref().is_some_and(|c| c.verify(&sys));
            let mut e = Entry::new(&subject, "nonexistent: conditions inconsistent", ok, citation);
            if let Some(c) = &cert {
                for (tag, l) in &c.multipliers {
                    e = e.value(format!("lambda({tag})"), l);
                }
            }
            rep.push(e);
            let tags: Vec<String> = witness.iter().map(|t| t.to_string()).collect();
            let _ = writeln!(text, "conflicting rows: {}", tags.join(", "));
            let _ = writeln!(
                text,
                "certificate: {} multipliers combine them to 0 = 1 ({})",
                cert.map_or(0, |c| c.multipliers.len()),
                if ok { "verified" } else { "NOT verified" }
            );
        }
        SolveOutcome::Unique { c } => {
            let (w, s) = cls.enumerators.as_ref().expect("unique outcome has enumerators");
            let ok = sys.satisfied_by(c) && enumerators_consistent(&p, w, s);
            let e = with_coeffs(Entry::new(&subject, cls.verdict.label(), ok, citation), "A", w);
            rep.push(with_coeffs(e, "B", s));
            let _ = writeln!(text, "W = {w}");
            let _ = writeln!(text, "S = {s}");
            let screen = cls.screen.as_ref().expect("unique outcome is screened");
            let _ = writeln!(text, "checks:");
            for r in &screen.results {
                let verdict = match (r.passed, r.weight) {
                    (true, _) => "pass".to_string(),
                    (false, Some(wt)) => format!("fails at weight {wt}"),
                    (false, None) => "fails".to_string(),
                };
                let _ = writeln!(text, "  {:<30} {verdict}", r.check.name());
                // a failed check is a nonexistence finding, not a failed verification
                let mut e = Entry::new(format!("check: {}", r.check.name()), verdict, true, "shadow restrictions");
                if let Some(wt) = r.weight {
                    e = e.int("weight", wt as i128);
                }
                rep.push(e);
            }
            let _ = writeln!(
                text,
                "consistency (W(1) = S(1) = 2^(n/2), S = transform of W, all rows hold): {}",
                if ok { "ok" } else { "FAILED" }
            );
        }
        SolveOutcome::Family {
            dimension,
            particular,
            basis,
        } => {
            let (w0, s0) = enumerators_from_c(&p, particular).map_err(|e| e.to_string())?;
            let mut ok = sys.satisfied_by(particular);
            let mut e = with_coeffs(
                Entry::new(&subject, cls.verdict.label(), true, citation),
                "A",
                &w0,
            );
            e = with_coeffs(e, "B", &s0);
            let _ = writeln!(text, "W = {w0}");
            let mut shifted_terms = String::new();
            for (idx, dir) in basis.iter().enumerate() {
                let (wd, sd) = enumerators_from_c(&p, dir).map_err(|e| e.to_string())?;
                let shifted: Vec<Rational> = particular.iter().zip(dir).map(|(a, b)| a + b).collect();
                ok &= sys.satisfied_by(&shifted);
                e = with_coeffs(e, &format!("dA{}", idx + 1), &wd);
                e = with_coeffs(e, &format!("dB{}", idx + 1), &sd);
                let _ = writeln!(text, "    + x{} * ({wd})", idx + 1);
                let _ = writeln!(shifted_terms, "    + x{} * ({sd})", idx + 1);
            }
            e.passed = ok;
            rep.push(e);
            let _ = writeln!(text, "S = {s0}");
            text.push_str(&shifted_terms);
            let _ = writeln!(
                text,
                "{dimension} free parameter(s); every member satisfies all rows: {}",
                if ok { "ok" } else { "FAILED" }
            );
        }
    }
    Ok(Emitted::new(rep, text))
}

fn classify_grid(m_max: usize) -> Result<Emitted, String> {
    let cells: Vec<(usize, usize)> = (0..=11)
        .flat_map(|t| (0..=m_max).map(move |m| (t, m)))
        .filter(|&(t, m)| t + m > 0)
        .collect();
    let results: Vec<(ParamSet, Verdict, bool)> = cells
        .par_iter()
        .map(|&(t, m)| {
            let p = ParamSet::from_mt(m, t).expect("valid residue");
            let cls = classify(&p);
            let ok = cls
                .enumerators
                .as_ref()
                .is_none_or(|(w, s)| enumerators_consistent(&p, w, s));
            (p, cls.verdict, ok)
        })
        .collect();

    let mut rep = Report::new("classify", &[("m_max", m_max.to_string())]);
    let mut text = format!("verdicts for n = 24m + 2t, 0 <= m <= {m_max}\n");
    for t in 0..=11 {
        let row: Vec<&(ParamSet, Verdict, bool)> = results.iter().filter(|(p, _, _)| p.t == t).collect();
        let mut spans: Vec<(usize, usize, String)> = Vec::new();
        for (p, v, _) in &row {
            let label = v.label();
            match spans.last_mut() {
                Some((_, end, l)) if *l == label => *end = p.m,
                _ => spans.push((p.m, p.m, label)),
            }
        }
        let parts: Vec<String> = spans
            .iter()
            .map(|(a, b, l)| if a == b { format!("m={a} {l}") } else { format!("m={a}..{b} {l}") })
            .collect();
        let _ = writeln!(text, "t={t:>2} (24m+{:<2}): {}", 2 * t, parts.join("; "));
        for (p, v, ok) in row {
            rep.push(
                Entry::new(format!("n={}", p.n), v.label(), *ok, "extremal and minimal-shadow coefficient conditions")
                    .int("t", p.t as i128)
                    .int("m", p.m as i128),
            );
        }
    }
    if !rep.passed {
        text.push_str("consistency check FAILED for some unique enumerator\n");
    }
    Ok(Emitted::new(rep, text))
}

fn nonexistence(t: usize, m_max: usize) -> Result<Emitted, String> {
    let r = theorems::check_nonexistence(t, m_max).map_err(|e| e.to_string())?;
    let mut rep = Report::new("nonexistence", &[("t", t.to_string()), ("m_max", m_max.to_string())]);
    let citation = format!("nonexistence equation {} = 0 for n = 24m+{}", r.polynomial, 2 * t);
    let mut text = format!("t={t} (n = 24m+{}): {} = 0\n", 2 * t, r.polynomial);
    let _ = writeln!(text, "{:>4} {:>6}  {:>12}  {:>12}  {:<13} certificate", "m", "n", "polynomial", "reduction", "solver");
    for row in &r.rows {
        let mut e = Entry::new(
            format!("m={}", row.m),
            row.solver.clone().unwrap_or_else(|| "not solved".into()),
            row.passed(),
            &citation,
        )
        .value("polynomial", &arith::from_integer(row.residual.clone()));
        if let Some(red) = &row.reduced {
            e = e.value("reduction", red);
        }
        rep.push(e);
        let _ = writeln!(
            text,
            "{:>4} {:>6}  {:>12}  {:>12}  {:<13} {}",
            row.m,
            row.n,
            row.residual.to_string(),
            row.reduced.as_ref().map_or("-".into(), format_rational),
            row.solver.as_deref().unwrap_or("-"),
            if row.m == 0 {
                "-"
            } else if row.certified {
                "verified"
            } else {
                "MISSING"
            }
        );
    }
    let _ = writeln!(text, "result: {}", if r.passed() { "all rows pass" } else { "FAILED" });
    Ok(Emitted::new(rep, text))
}

fn thresholds(t: usize, m_max: usize, full: bool) -> Result<Emitted, String> {
    let mode = if full { ScanMode::Full } else { ScanMode::Bracket };
    let r = theorems::threshold_scan(t, m_max, mode).map_err(|e| e.to_string())?;
    let mut rep = Report::new(
        "thresholds",
        &[
            ("t", t.to_string()),
            ("m_max", m_max.to_string()),
            ("mode", if full { "full" } else { "bracket" }.into()),
        ],
    );
    let citation = format!("bound polynomial {}: {} < 0 from m = {}", r.polynomial, r.index, r.stored);
    let show = |v: Option<usize>| v.map_or("none".to_string(), |m| m.to_string());
    let mut text = format!(
        "t={t} (n = 24m+{}): sign of {} is the sign of {}\n",
        2 * t,
        r.index,
        r.polynomial
    );
    let _ = writeln!(
        text,
        "first negative m: polynomial {}, closed form {}, solver {} ({} scan, m <= {m_max})",
        show(r.from_polynomial),
        show(r.from_closed_form),
        show(r.from_solver),
        if full { "full" } else { "bracket" }
    );
    let _ = writeln!(text, "stored threshold: {}", r.stored);
    let mut head = Entry::new("threshold", show(r.from_solver), r.passed(), &citation).int("stored", r.stored as i128);
    for (name, v) in [
        ("polynomial", r.from_polynomial),
        ("closed_form", r.from_closed_form),
        ("solver", r.from_solver),
    ] {
        if let Some(m) = v {
            head = head.int(name, m as i128);
        }
    }
    rep.push(head);
    for pt in &r.points {
        let mut e = Entry::new(
            format!("m={}", pt.m),
            if pt.agrees() { "routes agree" } else { "routes DISAGREE" },
            pt.agrees(),
            &citation,
        );
        for (name, v) in [
            ("solver", &pt.solver),
            ("closed_form", &pt.closed_form),
            ("alpha_beta", &pt.via_alpha_beta),
        ] {
            if let Some(v) = v {
                e = e.value(name, v);
            }
        }
        rep.push(e);
        if pt.m + 1 >= r.stored && pt.m <= r.stored || !pt.agrees() {
            let _ = writeln!(
                text,
                "m={}: {} = {} ({})",
                pt.m,
                r.index,
                pt.solver.as_ref().map_or("undetermined".into(), format_rational),
                if pt.agrees() { "all routes agree" } else { "routes DISAGREE" }
            );
        }
    }
    let _ = writeln!(text, "result: {}", if r.passed() { "ok" } else { "FAILED" });
    Ok(Emitted::new(rep, text))
}

fn summary(m_max: usize) -> Emitted {
    let s = theorems::summary(m_max);
    let mut rep = Report::new("summary", &[("m_max", s.m_max.to_string())]);
    for row in &s.rows {
        let citation = match row.status {
            theorems::FamilyStatus::BoundedDoublyEven { .. } => {
                "stored doubly-even bound (Zhang): m >= 154, 159, 164 for 24m, 24m+8, 24m+16".to_string()
            }
            _ => "extremal and minimal-shadow coefficient conditions".to_string(),
        };
        let mut e = Entry::new(format!("t={}", row.t), format!("{}: {}", row.status.label(), row.detail), row.verified, citation)
            .int("t", row.t as i128);
        match row.status {
            theorems::FamilyStatus::Bounded { m_min } | theorems::FamilyStatus::BoundedDoublyEven { m_min } => {
                e = e.int("m_min", m_min as i128);
            }
            _ => {}
        }
        rep.push(e);
    }
    Emitted::new(rep, s.to_string())
}

fn read_code(path: &PathBuf) -> Result<BinaryCode, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    gf2::parse_code(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn code_err(e: CodeError) -> String {
    e.to_string()
}

fn bits(v: u64, n: usize) -> String {
    (0..n).map(|j| if v >> j & 1 == 1 { '1' } else { '0' }).collect()
}

fn code_check(code: &BinaryCode) -> Result<Emitted, String> {
    let r = gf2::checks(code).map_err(code_err)?;
    let w = code.weight_enumerator().map_err(code_err)?;
    let mut rep = Report::new("code-check", &[("n", r.n.to_string()), ("k", r.dimension.to_string())]);
    let mut text = format!("[{}, {}] code\n", r.n, r.dimension);
    let _ = writeln!(text, "W = {w}");
    let _ = writeln!(text, "self-dual: {}", yes(r.self_dual));
    let _ = writeln!(text, "doubly-even: {}", yes(r.doubly_even));
    let _ = writeln!(text, "singly-even: {}", yes(r.singly_even));
    let _ = writeln!(text, "minimum distance: {}", r.min_distance.map_or("-".into(), |d| d.to_string()));
    if let (Some(ext), Some(bound)) = (r.extremal, r.distance_bound) {
        let _ = writeln!(text, "extremal (d = {bound}): {}", yes(ext));
    }
    let mut props = with_coeffs(Entry::new("code", "enumerated", true, "exhaustive enumeration"), "A", &w)
        .int("self_dual", i128::from(r.self_dual))
        .int("doubly_even", i128::from(r.doubly_even))
        .int("singly_even", i128::from(r.singly_even));
    if let Some(d) = r.min_distance {
        props = props.int("min_distance", d as i128);
    }
    if let Some(ext) = r.extremal {
        props = props.int("extremal", i128::from(ext));
    }
    rep.push(props);

    if r.singly_even && code.n() <= gf2::SHADOW_MAX_LENGTH {
        let dec = gf2::shadow_decompose(code).map_err(code_err)?;
        let s = &dec.shadow;
        let n = code.n();
        let symmetric = (0..=n).all(|wt| s.coeff(wt) == s.coeff(n - wt));
        let support = s.terms().all(|(wt, _)| wt % 4 == (n / 2) % 4);
        let total = s.total() == arith::pow2(n as i64 / 2);
        let ok = symmetric && support && total && s.coeff(0).is_zero() && dec.c0_dimension() + 1 == code.dimension();
        let _ = writeln!(text, "doubly-even subcode C_0: dimension {}", dec.c0_dimension());
        let _ = writeln!(text, "C_1 representative: {}", bits(dec.c1, n));
        let _ = writeln!(text, "C_2 representative: {}", bits(dec.c2, n));
        let _ = writeln!(text, "C_3 representative: {}", bits(dec.c3, n));
        let _ = writeln!(text, "S = {s}");
        let _ = writeln!(
            text,
            "shadow minimum weight: {} (minimal: {})",
            r.shadow_min_weight.map_or("-".into(), |v| v.to_string()),
            yes(r.minimal_shadow == Some(true))
        );
        let _ = writeln!(
            text,
            "shadow checks (B_w = B_(n-w), support n/2 mod 4, B_0 = 0, S(1) = 2^(n/2)): {}",
            if ok { "ok" } else { "FAILED" }
        );
        let mut e = with_coeffs(Entry::new("shadow", "decomposed", ok, "C_0^perp = C_0 + C_1 + C_2 + C_3"), "B", s)
            .int("c0_dimension", dec.c0_dimension() as i128);
        if let Some(v) = r.shadow_min_weight {
            e = e.int("shadow_min_weight", v as i128);
        }
        if let Some(v) = r.minimal_shadow {
            e = e.int("minimal_shadow", i128::from(v));
        }
        rep.push(e);
    }
    Ok(Emitted::new(rep, text))
}

fn cross_validate(code: &BinaryCode) -> Result<Emitted, String> {
    let x = gf2::cross_validate(code).map_err(code_err)?;
    let mut rep = Report::new("cross-validate", &[("n", code.n().to_string())]);
    let mut text = format!("{}\n", x.params);
    let _ = writeln!(text, "enumerated W = {}", x.weight);
    let _ = writeln!(text, "enumerated S = {}", x.shadow);
    let _ = writeln!(text, "meets every coefficient condition: {}", yes(x.satisfies_conditions));
    let _ = writeln!(text, "basis coefficients rebuild W and S: {}", yes(x.basis_reproduces));
    let _ = writeln!(text, "solver: {}", x.solver);
    let mut e = Entry::new(
        format!("n={}", code.n()),
        match x.matches_solver {
            Some(true) => "matches solver",
            Some(false) => "DIFFERS from solver",
            None => "solver does not give a unique enumerator",
        },
        x.passed(),
        "exhaustive enumeration against the unique predicted enumerator",
    );
    for (i, c) in x.basis_coeffs.iter().enumerate() {
        e = e.value(format!("c_{i}"), c);
    }
    e = with_coeffs(e, "A", &x.weight);
    e = with_coeffs(e, "B", &x.shadow);
    rep.push(e);
    let mut em = match x.matches_solver {
        Some(m) => {
            let _ = writeln!(text, "matches solver: {}", yes(m));
            if !m {
                let ws: Vec<String> = x.mismatched_weights.iter().map(|w| w.to_string()).collect();
                let _ = writeln!(text, "differing weights: {}", ws.join(", "));
            }
            Emitted::new(rep, text)
        }
        None => {
            let mut em = Emitted::new(rep, text);
            em.precondition = Some(format!(
                "length {} does not have a uniquely determined enumerator",
                code.n()
            ));
            em
        }
    };
    if em.precondition.is_none() && !em.report.passed {
        em.text.push_str("result: FAILED\n");
    }
    Ok(em)
}

fn alpha_beta(n: usize, i: usize, j: Option<usize>) -> Result<Emitted, String> {
    let p = params(n)?;
    p.basis_index(i).map_err(|e| e.to_string())?;
    let k = p.k();
    if let Some(j) = j {
        if j > k {
            return Err(format!("j = {j} out of range 0..={k}"));
        }
    }
    let mats = basis_matrices(&p);
    let mut rep = Report::new(
        "alpha-beta",
        &[
            ("n", n.to_string()),
            ("i", i.to_string()),
            ("j", j.map_or("all".into(), |j| j.to_string())),
        ],
    );
    let mut text = format!("{p}\n");

    let mut routes: Vec<(&str, Rational)> = vec![("direct", alpha_direct(&p, i))];
    let alpha_inv = mats.alpha().map_err(|_| "singular weight basis matrix".to_string())?;
    routes.push(("matrix", alpha_inv[(i, 0)].clone()));
    let m = p.m;
    if i == 2 * m + 1 {
        routes.push(("binomial_sum", alpha_2m1_closed(&p)));
        if let Some(v) = tables::alpha_2m1_product(p.t, m) {
            routes.push(("product", v));
        }
    } else if i == 2 * m && m >= 1 {
        routes.push(("binomial_sum", alpha_2m_closed(&p)));
        if let Some(v) = tables::alpha_2m_product(p.t, m) {
            routes.push(("product", v));
        }
    }
    push_routes(&mut rep, &mut text, &format!("alpha_({i},0)"), &routes);

    if i >= 1 {
        let beta_inv = mats.beta().map_err(|_| "singular shadow basis matrix".to_string())?;
        let js: Vec<usize> = match j {
            Some(j) => vec![j],
            None => (0..=k).collect(),
        };
        for j in js {
            let routes = vec![("formula", beta(&p, i, j)), ("matrix", beta_inv[(i, j)].clone())];
            push_routes(&mut rep, &mut text, &format!("beta_({i},{j})"), &routes);
        }
    } else {
        text.push_str("beta_(0,j) is not defined\n");
    }
    Ok(Emitted::new(rep, text))
}

fn push_routes(rep: &mut Report, text: &mut String, name: &str, routes: &[(&str, Rational)]) {
    let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
    let mut e = Entry::new(name, if agree { "agree" } else { "DISAGREE" }, agree, "change of basis");
    for (route, v) in routes {
        e = e.value(*route, v);
    }
    rep.push(e);
    let _ = writeln!(
        text,
        "{name} = {} [{}: {}]",
        format_rational(&routes[0].1),
        routes.iter().map(|(r, _)| *r).collect::<Vec<_>>().join(", "),
        if agree { "agree" } else { "DISAGREE" }
    );
    if !agree {
        for (route, v) in routes {
            let _ = writeln!(text, "  {route}: {}", format_rational(v));
        }
    }
}
