//! Batch verification of the named checks over exhaustively enumerated
//! ideals, with deterministic CSV/JSON reports.
//!
//! Each check runs over its full domain (single ideals or nested
//! pairs); cases are independent and fan out through [`exec`], with
//! results merged back in canonical enumeration order. Reports are
//! byte-identical across runs: wall times are recorded only when
//! explicitly requested.

use std::fmt;
use std::io::{BufRead, Write};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::betti::DepthValue;
use crate::construct::Certifier;
use crate::enumerate::{self, IdealFilter, IdealIterator};
use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::hochster::hochster_betti;
use crate::ideal::{Ideal, QuotientPresentation};
use crate::json::CertificateJson;
use crate::koszul::{depth, koszul_betti};
use crate::monomial::Monomial;
use crate::parse::parse_ideal;
use crate::stanley::sdepth_exact;

/// The named checks exposed by `verify`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckId {
    /// sdepth I >= 1 + depth S/I for every proper nonzero ideal, with
    /// a verified certificate per ideal (feasible up to n = 5).
    WeakConjecture,
    /// The same statement pinned to n = 4.
    Wc4,
    /// depth S/(I, x_k) >= depth S/I - 1.
    PropA1,
    /// depth S/(I : v) >= depth S/I for squarefree v outside I.
    CorA2,
    /// sdepth (I : v) >= sdepth I for squarefree v outside I.
    PropA3,
    /// For nested pairs over three variables with depth S'/U = depth
    /// S'/V = r: r = depth V/U iff r = depth S/W, W = (U + x4 V)S.
    LemmaEasy,
    /// sdepth >= depth for every presentation of dimension <= 2.
    ThmPDim2,
    /// sdepth J/I >= depth J/I for proper nonzero pairs in 3 variables.
    Cor3,
    /// sdepth J/I >= depth J/I for proper nonzero pairs in 4 variables.
    Prop4,
    /// The pair inequality restricted to modules whose associated
    /// primes all have dimension 3 (height one) in 4 variables.
    Lemma41,
    /// sdepth of an extended ideal grows by exactly one per adjoined
    /// free variable.
    HvzLift,
    /// Koszul Betti tables equal Hochster Betti tables entrywise.
    OracleAgree,
    /// Exact reproduction of the two worked four-variable examples.
    Examples,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::WeakConjecture,
        CheckId::Wc4,
        CheckId::PropA1,
        CheckId::CorA2,
        CheckId::PropA3,
        CheckId::LemmaEasy,
        CheckId::ThmPDim2,
        CheckId::Cor3,
        CheckId::Prop4,
        CheckId::Lemma41,
        CheckId::HvzLift,
        CheckId::OracleAgree,
        CheckId::Examples,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckId::WeakConjecture => "weak-conjecture",
            CheckId::Wc4 => "wc4",
            CheckId::PropA1 => "prop-a1",
            CheckId::CorA2 => "cor-a2",
            CheckId::PropA3 => "prop-a3",
            CheckId::LemmaEasy => "lemma-easy",
            CheckId::ThmPDim2 => "thm-p-dim2",
            CheckId::Cor3 => "cor-3",
            CheckId::Prop4 => "prop-4",
            CheckId::Lemma41 => "lemma-41",
            CheckId::HvzLift => "hvz-lift",
            CheckId::OracleAgree => "oracle-agree",
            CheckId::Examples => "examples",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.into()))
    }

    pub fn description(&self) -> &'static str {
        match self {
            CheckId::WeakConjecture => {
                "sdepth I >= 1 + depth S/I for all proper nonzero squarefree ideals, each with a verified certificate"
            }
            CheckId::Wc4 => "the certificate check pinned to all 166 ideals in 4 variables",
            CheckId::PropA1 => "depth S/(I,x_k) >= depth S/I - 1 for all proper I and variables x_k",
            CheckId::CorA2 => "depth S/(I:v) >= depth S/I for all squarefree monomials v outside I",
            CheckId::PropA3 => "sdepth (I:v) >= sdepth I for all squarefree monomials v outside I",
            CheckId::LemmaEasy => {
                "for U in V over 3 variables with depth S'/U = depth S'/V = r: r = depth V/U iff r = depth S/W, W = (U + x4 V)S"
            }
            CheckId::ThmPDim2 => "sdepth >= depth for every squarefree presentation of dimension <= 2",
            CheckId::Cor3 => "sdepth J/I >= depth J/I for all proper nonzero nested pairs in 3 variables",
            CheckId::Prop4 => "sdepth J/I >= depth J/I for all proper nonzero nested pairs in 4 variables",
            CheckId::Lemma41 => {
                "the pair inequality when every associated prime of J/I has dimension 3 (4 variables)"
            }
            CheckId::HvzLift => "sdepth of I extended by one free variable equals sdepth I + 1",
            CheckId::OracleAgree => "Koszul Betti tables equal Hochster Betti tables entrywise",
            CheckId::Examples => "exact depths of the two worked four-variable examples",
        }
    }

    /// Inclusive feasibility bounds on the ring size.
    pub fn feasible_n(&self) -> (usize, usize) {
        match self {
            CheckId::WeakConjecture => (1, 5),
            CheckId::Wc4 => (4, 4),
            CheckId::PropA1 | CheckId::CorA2 | CheckId::PropA3 | CheckId::ThmPDim2 => (1, 4),
            CheckId::LemmaEasy => (4, 4),
            CheckId::Cor3 => (3, 3),
            CheckId::Prop4 | CheckId::Lemma41 => (4, 4),
            CheckId::HvzLift => (2, 4),
            CheckId::OracleAgree => (1, 5),
            CheckId::Examples => (4, 4),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// One verified case.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseRecord {
    pub label: String,
    pub gens: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth_q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdepth: Option<i64>,
    /// Slack of the inequality under test; negative means failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<i64>,
    pub pass: bool,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl CaseRecord {
    fn new(label: impl Into<String>, gens: usize) -> Self {
        Self {
            label: label.into(),
            gens,
            depth_q: None,
            sdepth: None,
            margin: None,
            pass: true,
            ms: 0,
            detail: None,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin: Option<i64>,
    /// Labels attaining the minimum margin (at most five).
    pub extremal: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub summary: Summary,
    pub cases: Vec<CaseRecord>,
}

impl Report {
    fn assemble(check: CheckId, n: usize, cases: Vec<CaseRecord>) -> Self {
        let failures = cases.iter().filter(|c| !c.pass).count();
        let min_margin = cases.iter().filter_map(|c| c.margin).min();
        let extremal = match min_margin {
            None => vec![],
            Some(m) => cases
                .iter()
                .filter(|c| c.margin == Some(m))
                .take(5)
                .map(|c| c.label.clone())
                .collect(),
        };
        Report {
            check: check.as_str().into(),
            n,
            summary: Summary {
                cases: cases.len(),
                failures,
                min_margin,
                extremal,
            },
            cases,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("ideal,gens,depth_q,sdepth,margin,pass,ms\n");
        for c in &self.cases {
            let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                csv_escape(&c.label),
                c.gens,
                opt(c.depth_q),
                opt(c.sdepth),
                opt(c.margin),
                c.pass,
                c.ms
            ));
        }
        out
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.into()
    }
}

/// Options for a batch run. Timings default to off so repeated runs
/// emit byte-identical reports.
#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub mode: ExecMode,
    pub timings: bool,
    /// Seed for the sampled domains (the n = 5 oracle agreement run).
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            mode: ExecMode::Parallel,
            timings: false,
            seed: 0x5dee7,
        }
    }
}

/// Runs a check over its full domain with default options.
pub fn verify_batch(check: CheckId, n: usize) -> Result<Report> {
    verify_batch_with(check, n, &RunOptions::default())
}

pub fn verify_batch_with(check: CheckId, n: usize, opts: &RunOptions) -> Result<Report> {
    let (min, max) = check.feasible_n();
    if n < min || n > max {
        return Err(Error::CheckInfeasible {
            check: check.as_str().into(),
            n,
            min,
            max,
        });
    }
    let cases = match check {
        CheckId::WeakConjecture | CheckId::Wc4 => weak_conjecture_cases(n, opts),
        CheckId::PropA1 => prop_a1_cases(n, opts),
        CheckId::CorA2 => colon_depth_cases(n, opts),
        CheckId::PropA3 => colon_sdepth_cases(n, opts),
        CheckId::LemmaEasy => lemma_easy_cases(n, opts),
        CheckId::ThmPDim2 => dim2_cases(n, opts),
        CheckId::Cor3 | CheckId::Prop4 => pair_cases(n, opts, false),
        CheckId::Lemma41 => pair_cases(n, opts, true),
        CheckId::HvzLift => lift_cases(n, opts),
        CheckId::OracleAgree => oracle_cases(n, opts),
        CheckId::Examples => examples_cases(),
    }?;
    Ok(Report::assemble(check, n, cases))
}

fn timed<T>(timings: bool, f: impl FnOnce() -> T) -> (T, u64) {
    if timings {
        let start = Instant::now();
        let out = f();
        (out, start.elapsed().as_millis() as u64)
    } else {
        (f(), 0)
    }
}

fn depth_of_quotient(i: &Ideal) -> Result<usize> {
    Ok(depth(&QuotientPresentation::quotient_ring(i.clone())?)?.expect_finite())
}

fn depth_of_pair(inner: &Ideal, outer: &Ideal) -> Result<usize> {
    Ok(depth(&QuotientPresentation::new(inner.clone(), outer.clone())?)?.expect_finite())
}

fn sdepth_of_ideal(i: &Ideal) -> Result<usize> {
    Ok(sdepth_exact(&QuotientPresentation::of_ideal(i.clone())?)?.value)
}

fn fail_case(label: String, err: &Error) -> CaseRecord {
    let mut c = CaseRecord::new(label, 0);
    c.pass = false;
    c.detail = Some(serde_json::json!({ "error": err.to_string() }));
    c
}

fn weak_conjecture_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let ideals = enumerate::proper_nonzero_ideals(n);
    let certifier = Certifier::new();
    Ok(exec::map_ordered(opts.mode, &ideals, |i| {
        let label = i.to_string();
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let dq = depth_of_quotient(i)? as i64;
            let cert = certifier.certify(i)?;
            let sd = sdepth_of_ideal(i)? as i64;
            let bound = cert.claimed_bound as i64;
            let mut c = CaseRecord::new(&label, i.num_gens());
            c.depth_q = Some(dq);
            c.sdepth = Some(sd);
            c.margin = Some(sd - (1 + dq));
            c.pass = sd >= 1 + dq && bound >= 1 + dq && bound <= sd;
            c.detail = if c.pass {
                Some(serde_json::json!({ "certificate_bound": bound }))
            } else {
                Some(serde_json::to_value(CertificateJson::from_certificate(&cert))?)
            };
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

fn prop_a1_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let mut domain = Vec::new();
    for i in enumerate::all_ideals(n) {
        if !i.is_proper() {
            continue;
        }
        for k in 1..=n {
            domain.push((i.clone(), k));
        }
    }
    Ok(exec::map_ordered(opts.mode, &domain, |(i, k)| {
        let label = format!("({i}); x{k}");
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let base = depth_of_quotient(i)? as i64;
            let extended = i.sum(&Ideal::principal(Monomial::var(*k, n)))?;
            let shifted = depth_of_quotient(&extended)? as i64;
            let mut c = CaseRecord::new(&label, i.num_gens());
            c.depth_q = Some(base);
            c.margin = Some(shifted - (base - 1));
            c.pass = shifted >= base - 1;
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

/// Domain shared by the two colon checks: proper nonzero `I` with a
/// squarefree monomial `v` outside it.
fn colon_domain(n: usize) -> Vec<(Ideal, Monomial)> {
    let mut domain = Vec::new();
    for i in enumerate::proper_nonzero_ideals(n) {
        for mask in 0u32..1 << n {
            let v = Monomial::from_mask(mask, n);
            if !i.contains(&v) {
                domain.push((i.clone(), v));
            }
        }
    }
    domain
}

fn colon_depth_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let domain = colon_domain(n);
    Ok(exec::map_ordered(opts.mode, &domain, |(i, v)| {
        let label = format!("({i}) : {v}");
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let base = depth_of_quotient(i)? as i64;
            let colon = depth_of_quotient(&i.colon(v)?)? as i64;
            let mut c = CaseRecord::new(&label, i.num_gens());
            c.depth_q = Some(base);
            c.margin = Some(colon - base);
            c.pass = colon >= base;
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

fn colon_sdepth_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let domain = colon_domain(n);
    Ok(exec::map_ordered(opts.mode, &domain, |(i, v)| {
        let label = format!("({i}) : {v}");
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let base = sdepth_of_ideal(i)? as i64;
            let colon = sdepth_of_ideal(&i.colon(v)?)? as i64;
            let mut c = CaseRecord::new(&label, i.num_gens());
            c.sdepth = Some(base);
            c.margin = Some(colon - base);
            c.pass = colon >= base;
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

fn lemma_easy_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    debug_assert_eq!(n, 4);
    let small = n - 1;
    let ideals = enumerate::all_ideals(small);
    let mut domain = Vec::new();
    for u in &ideals {
        if !u.is_proper() {
            continue;
        }
        for v in &ideals {
            if !v.is_proper() || u == v || !u.is_contained_in(v) {
                continue;
            }
            let du = depth(&QuotientPresentation::quotient_ring(u.clone())?)?;
            let dv = depth(&QuotientPresentation::quotient_ring(v.clone())?)?;
            if let (DepthValue::Finite(a), DepthValue::Finite(b)) = (du, dv) {
                if a == b {
                    domain.push((u.clone(), v.clone(), a));
                }
            }
        }
    }
    Ok(exec::map_ordered(opts.mode, &domain, |(u, v, r)| {
        let label = format!("U=({u}); V=({v})");
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let quotient_depth = depth_of_pair(u, v)?;
            let w = u
                .extended(n)
                .sum(&v.extended(n).scaled(&Monomial::var(n, n))?)?;
            let w_depth = depth_of_quotient(&w)?;
            let mut c = CaseRecord::new(&label, u.num_gens());
            c.depth_q = Some(*r as i64);
            c.pass = (quotient_depth == *r) == (w_depth == *r);
            c.detail = Some(serde_json::json!({
                "depth_VU": quotient_depth,
                "depth_SW": w_depth,
            }));
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

/// Nested strict pairs `(inner, outer)` presenting nonzero modules.
fn nested_pairs(n: usize, allow_zero_inner: bool, allow_unit_outer: bool) -> Vec<(Ideal, Ideal)> {
    let ideals = enumerate::all_ideals(n);
    let mut out = Vec::new();
    for inner in &ideals {
        if !inner.is_proper() {
            continue;
        }
        if inner.is_zero() && !allow_zero_inner {
            continue;
        }
        for outer in &ideals {
            if outer.is_zero() || inner == outer {
                continue;
            }
            if outer.is_unit() && !allow_unit_outer {
                continue;
            }
            if inner.is_contained_in(outer) {
                out.push((inner.clone(), outer.clone()));
            }
        }
    }
    out
}

fn dim2_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let pairs = nested_pairs(n, true, true);
    let mut domain = Vec::new();
    for (inner, outer) in pairs {
        let pres = QuotientPresentation::new(inner, outer)?;
        if let Some(d) = pres.dimension()?.finite() {
            if d <= 2 {
                domain.push(pres);
            }
        }
    }
    Ok(exec::map_ordered(opts.mode, &domain, |pres| {
        let label = pres.to_string();
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let d = depth(pres)?.expect_finite() as i64;
            let s = sdepth_exact(pres)?.value as i64;
            let mut c = CaseRecord::new(&label, pres.outer().num_gens());
            c.depth_q = Some(d);
            c.sdepth = Some(s);
            c.margin = Some(s - d);
            c.pass = s >= d;
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

fn pair_cases(n: usize, opts: &RunOptions, height_one_only: bool) -> Result<Vec<CaseRecord>> {
    let pairs = nested_pairs(n, false, false);
    let mut domain = Vec::new();
    for (inner, outer) in pairs {
        let pres = QuotientPresentation::new(inner, outer)?;
        if height_one_only {
            let ass = pres.ass_primes()?;
            if !ass.iter().all(|p| p.len() == 1) {
                continue;
            }
        }
        domain.push(pres);
    }
    Ok(exec::map_ordered(opts.mode, &domain, |pres| {
        let label = pres.to_string();
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let d = depth(pres)?.expect_finite() as i64;
            let s = sdepth_exact(pres)?.value as i64;
            let mut c = CaseRecord::new(&label, pres.outer().num_gens());
            c.depth_q = Some(d);
            c.sdepth = Some(s);
            c.margin = Some(s - d);
            c.pass = s >= d;
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

fn lift_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let small = enumerate::proper_nonzero_ideals(n - 1);
    Ok(exec::map_ordered(opts.mode, &small, |i| {
        let label = format!("({i}) in {n} variables");
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let base = sdepth_of_ideal(i)? as i64;
            let lifted = sdepth_of_ideal(&i.extended(n))? as i64;
            let mut c = CaseRecord::new(&label, i.num_gens());
            c.sdepth = Some(base);
            c.pass = lifted == base + 1;
            c.detail = Some(serde_json::json!({ "lifted_sdepth": lifted }));
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

fn oracle_cases(n: usize, opts: &RunOptions) -> Result<Vec<CaseRecord>> {
    let ideals: Vec<Ideal> = if n <= 4 {
        enumerate::proper_nonzero_ideals(n)
    } else {
        sample_ideals(n, 200, opts.seed)
    };
    Ok(exec::map_ordered(opts.mode, &ideals, |i| {
        let label = i.to_string();
        let (result, ms) = timed(opts.timings, || -> Result<CaseRecord> {
            let pres = QuotientPresentation::quotient_ring(i.clone())?;
            let koszul = koszul_betti(&pres)?;
            let hochster = hochster_betti(i)?;
            let mut c = CaseRecord::new(&label, i.num_gens());
            c.depth_q = Some((n - koszul.projective_dimension()) as i64);
            c.pass = koszul == hochster;
            if !c.pass {
                c.detail = Some(serde_json::json!({
                    "koszul": koszul.to_string(),
                    "hochster": hochster.to_string(),
                }));
            }
            Ok(c)
        });
        let mut case = result.unwrap_or_else(|e| fail_case(label, &e));
        case.ms = ms;
        case
    }))
}

/// Distinct random proper nonzero squarefree ideals, seeded.
fn sample_ideals(n: usize, count: usize, seed: u64) -> Vec<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let gens: Vec<Monomial> = (0..rng.gen_range(1..=4))
            .map(|_| Monomial::from_mask(rng.gen_range(1..1u32 << n), n))
            .collect();
        let ideal = Ideal::normalize(n, &gens).expect("sampled gens fit the ring");
        if ideal.is_zero() || !ideal.is_proper() {
            continue;
        }
        if seen.insert(ideal.clone()) {
            out.push(ideal);
        }
    }
    out
}

fn examples_cases() -> Result<Vec<CaseRecord>> {
    let mut cases = Vec::new();
    let mut exact = |label: &str, got: String, expected: &str| {
        let mut c = CaseRecord::new(label, 0);
        c.pass = got == expected;
        c.detail = Some(serde_json::json!({ "got": got, "expected": expected }));
        cases.push(c);
    };

    // first example: V = (x1,x2), U = V ∩ (x1,x3), W = (U + x4 V)S
    let v = parse_ideal("x1, x2", 3)?;
    let u = v.intersect(&parse_ideal("x1, x3", 3)?)?;
    exact("example-easy: U = V ∩ (x1,x3)", u.to_string(), "x1, x2*x3");
    let w = u
        .extended(4)
        .sum(&v.extended(4).scaled(&Monomial::var(4, 4))?)?;
    exact("example-easy: W = (U + x4*V)S", w.to_string(), "x1, x2*x3, x2*x4");
    exact(
        "example-easy: depth S'/U",
        depth_of_quotient(&u)?.to_string(),
        "1",
    );
    exact(
        "example-easy: depth S'/V",
        depth_of_quotient(&v)?.to_string(),
        "1",
    );
    exact(
        "example-easy: depth V/U",
        depth_of_pair(&u, &v)?.to_string(),
        "1",
    );
    exact(
        "example-easy: depth S/W",
        depth_of_quotient(&w)?.to_string(),
        "1",
    );

    // second example: J = (x1x3, x2), I = (x1x2, x1x3), T = (I + x4 J)S
    let j = parse_ideal("x1*x3, x2", 3)?;
    let i = parse_ideal("x1*x2, x1*x3", 3)?;
    let t = i
        .extended(4)
        .sum(&j.extended(4).scaled(&Monomial::var(4, 4))?)?;
    exact(
        "example-hard: T = (I + x4*J)S",
        t.to_string(),
        "x1*x2, x1*x3, x2*x4",
    );
    let meet = parse_ideal("x1, x2", 4)?
        .intersect(&parse_ideal("x2, x3", 4)?)?
        .intersect(&parse_ideal("x1, x4", 4)?)?;
    exact(
        "example-hard: T = (x1,x2) ∩ (x2,x3) ∩ (x1,x4)",
        meet.to_string(),
        t.to_string().as_str(),
    );
    exact(
        "example-hard: depth S/T",
        depth_of_quotient(&t)?.to_string(),
        "2",
    );
    exact(
        "example-hard: depth S'/I",
        depth_of_quotient(&i)?.to_string(),
        "1",
    );
    exact(
        "example-hard: depth S'/J",
        depth_of_quotient(&j)?.to_string(),
        "1",
    );
    Ok(cases)
}

/// Progress of a frontier run.
#[derive(Clone, Debug, Serialize)]
pub struct FrontierStatus {
    pub processed: usize,
    pub failures: usize,
    /// Whether the stream was exhausted (false: stopped on budget).
    pub exhausted: bool,
}

pub const FRONTIER_HEADER_PREFIX: &str = "sdepth-frontier v1";

/// Exploratory run at n = 6: streams the symmetry-reduced ideal list,
/// certifies each representative, and appends one line per case to the
/// checkpoint so interrupted runs resume where they stopped. This is
/// exploration, not an acceptance gate.
pub fn run_frontier(
    n: usize,
    budget: Option<Duration>,
    checkpoint: Option<&std::path::Path>,
    mut progress: impl FnMut(&FrontierStatus),
) -> Result<FrontierStatus> {
    if n != 6 {
        return Err(Error::CheckInfeasible {
            check: "weak-conjecture --frontier".into(),
            n,
            min: 6,
            max: 6,
        });
    }
    let header = format!("{FRONTIER_HEADER_PREFIX} check=weak-conjecture n={n}");
    let mut skip = 0usize;
    let mut failures = 0usize;
    if let Some(path) = checkpoint {
        if path.exists() {
            let file = std::fs::File::open(path)?;
            let mut lines = std::io::BufReader::new(file).lines();
            match lines.next() {
                Some(Ok(first)) if first == header => {}
                _ => {
                    return Err(Error::InvalidPresentation(format!(
                        "checkpoint header mismatch; expected `{header}`"
                    )))
                }
            }
            for line in lines {
                let line = line?;
                if line.is_empty() {
                    continue;
                }
                skip += 1;
                if line.ends_with(",false") {
                    failures += 1;
                }
            }
        }
    }
    let mut sink: Option<std::fs::File> = match checkpoint {
        Some(path) => {
            let fresh = !path.exists();
            let mut file = std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)?;
            if fresh {
                writeln!(file, "{header}")?;
            }
            Some(file)
        }
        None => None,
    };

    let certifier = Certifier::new();
    let start = Instant::now();
    let mut status = FrontierStatus {
        processed: skip,
        failures,
        exhausted: true,
    };
    let stream = IdealIterator::new(n, IdealFilter::ProperNonzero)?
        .filter(enumerate::is_canonical_under_symmetry)
        .skip(skip);
    for ideal in stream {
        if let Some(limit) = budget {
            if start.elapsed() > limit {
                status.exhausted = false;
                break;
            }
        }
        let line = match (|| -> Result<(String, bool)> {
            let dq = depth_of_quotient(&ideal)?;
            let cert = certifier.certify(&ideal)?;
            let pass = cert.claimed_bound >= 1 + dq;
            Ok((
                format!("{},{},{},{}", csv_escape(&ideal.to_string()), dq, cert.claimed_bound, pass),
                pass,
            ))
        })() {
            Ok((line, pass)) => {
                if !pass {
                    status.failures += 1;
                }
                line
            }
            Err(e) => {
                status.failures += 1;
                format!("{},error:{e},,false", csv_escape(&ideal.to_string()))
            }
        };
        if let Some(file) = sink.as_mut() {
            writeln!(file, "{line}")?;
        }
        status.processed += 1;
        if status.processed % 1000 == 0 {
            progress(&status);
        }
    }
    progress(&status);
    Ok(status)
}
