//! Exhaustive verification suites over families of (θ, n).
//!
//! Each instance yields one JSON line. Instances whose shape has a column
//! taller than `n` are reported with status `"skipped"`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::grothendieck::{
    grothendieck_bialternant, grothendieck_tableaux, schur_bialternant, schur_tableaux, value_at_ones,
};
use crate::involutions::{self, g_map_with, InvolutionError};
use crate::polyring::{LaurentPoly, Rational};
use crate::shapes::{partitions_up_to, SkewShape};
use crate::tableaux::{count_svt, signed_excess_count, SetValuedTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Parity,
    InvolutionF,
    InvolutionG,
    Bialternant,
    Specialization,
    All,
}

impl Suite {
    pub const CONCRETE: [Suite; 5] =
        [Suite::Parity, Suite::InvolutionF, Suite::InvolutionG, Suite::Bialternant, Suite::Specialization];

    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::CONCRETE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Parity => "parity",
            Suite::InvolutionF => "involution-f",
            Suite::InvolutionG => "involution-g",
            Suite::Bialternant => "bialternant",
            Suite::Specialization => "specialization",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "parity" => Suite::Parity,
            "involution-f" => Suite::InvolutionF,
            "involution-g" => Suite::InvolutionG,
            "bialternant" => Suite::Bialternant,
            "specialization" => Suite::Specialization,
            "all" => Suite::All,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

/// Deliberate defects, used to confirm that the checks can fail.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// `g` returns its argument unchanged.
    SkipGToggle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceResult {
    pub suite: Suite,
    pub shape: SkewShape,
    pub n: u32,
    pub status: Status,
    /// Why the instance failed or was skipped.
    pub message: Option<String>,
    /// Suite-specific report fields.
    pub report: Map<String, Value>,
}

impl InstanceResult {
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("suite".into(), json!(self.suite.to_string()));
        obj.insert("shape".into(), json!(self.shape.to_string()));
        obj.insert("n".into(), json!(self.n));
        for (k, v) in &self.report {
            obj.insert(k.clone(), v.clone());
        }
        obj.insert("status".into(), json!(self.status.as_str()));
        if let Some(m) = &self.message {
            obj.insert("message".into(), json!(m));
        }
        Value::Object(obj)
    }
}

/// Every `(λ/μ, n)` with `|λ| ≤ max_cells`, `μ ⊆ λ`, `1 ≤ n ≤ max_n`, sorted
/// by `|λ|`, then shape text, then `n`.
pub fn skew_family(max_cells: u32, max_n: u32) -> Vec<(SkewShape, u32)> {
    let mut out = Vec::new();
    for lambda in partitions_up_to(max_cells) {
        for mu in lambda.subpartitions() {
            let shape = SkewShape::new(lambda.clone(), mu).expect("subpartitions are contained");
            for n in 1..=max_n {
                out.push((shape.clone(), n));
            }
        }
    }
    out.sort_by_cached_key(|(s, n)| (s.outer().size(), s.to_string(), *n));
    out
}

/// The straight shapes of [`skew_family`].
pub fn straight_family(max_cells: u32, max_n: u32) -> Vec<(SkewShape, u32)> {
    skew_family(max_cells, max_n).into_iter().filter(|(s, _)| s.is_straight()).collect()
}

fn result(suite: Suite, shape: &SkewShape, n: u32, problems: Vec<String>, report: Map<String, Value>) -> InstanceResult {
    let status = if problems.is_empty() { Status::Pass } else { Status::Fail };
    InstanceResult {
        suite,
        shape: shape.clone(),
        n,
        status,
        message: (!problems.is_empty()).then(|| problems.join("; ")),
        report,
    }
}

fn skipped(suite: Suite, shape: &SkewShape, n: u32, reason: &str) -> InstanceResult {
    InstanceResult {
        suite,
        shape: shape.clone(),
        n,
        status: Status::Skipped,
        message: Some(reason.to_string()),
        report: Map::new(),
    }
}

fn errored(suite: Suite, shape: &SkewShape, n: u32, err: impl fmt::Display) -> InstanceResult {
    result(suite, shape, n, vec![err.to_string()], Map::new())
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("reports are JSON objects"),
    }
}

/// Runs one concrete suite on one instance.
pub fn run_instance(suite: Suite, shape: &SkewShape, n: u32, fault: Fault) -> InstanceResult {
    let straight_only = suite == Suite::Bialternant;
    if straight_only && shape.outer().len() > n as usize {
        return skipped(suite, shape, n, "more parts than variables");
    }
    if !shape.is_feasible(n) {
        return skipped(suite, shape, n, "column taller than n");
    }
    match suite {
        Suite::Parity => parity(shape, n, fault),
        Suite::InvolutionF => involution_f(shape, n),
        Suite::InvolutionG => involution_g(shape, n, fault),
        Suite::Bialternant => bialternant(shape, n),
        Suite::Specialization => specialization(shape, n),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

fn parity(shape: &SkewShape, n: u32, fault: Fault) -> InstanceResult {
    let report = match involutions::verify_parity(shape, n) {
        Ok(r) => r,
        Err(e) => return errored(Suite::Parity, shape, n, e),
    };
    let mut problems = report.problems.clone();
    if fault == Fault::SkipGToggle {
        problems.extend(faulty_pairing(shape, n));
    }
    let mut fields = object(report.to_json());
    fields.remove("shape");
    fields.remove("n");
    result(Suite::Parity, shape, n, problems, fields)
}

fn faulty_pairing(shape: &SkewShape, n: u32) -> Vec<String> {
    let skip = |t: &SetValuedTableau, _: &SetValuedTableau| -> Result<SetValuedTableau, InvolutionError> { Ok(t.clone()) };
    match involutions::check_pairing_with(shape, n, skip) {
        Ok(check) => check.problems,
        Err(e) => vec![e.to_string()],
    }
}

fn involution_f(shape: &SkewShape, n: u32) -> InstanceResult {
    if shape.is_empty() {
        return skipped(Suite::InvolutionF, shape, n, "empty shape has no corner box");
    }
    let check = match involutions::check_induction(shape, n) {
        Ok(c) => c,
        Err(e) => return errored(Suite::InvolutionF, shape, n, e),
    };
    let mut problems = check.problems.clone();
    for c in &check.classes {
        problems.extend(c.problems.iter().cloned());
    }
    let sizes: Map<String, Value> = check.class_sizes().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    let fields = json!({
        "corner": check.corner.cell.to_string(),
        "count": check.count.to_string(),
        "claim1": check.claim1,
        "claim2_sizes": sizes,
        "class0_fill_total": check.class_zero_fill_total.to_string(),
    });
    result(Suite::InvolutionF, shape, n, problems, object(fields))
}

fn involution_g(shape: &SkewShape, n: u32, fault: Fault) -> InstanceResult {
    let check = match fault {
        Fault::None => involutions::check_pairing_with(shape, n, g_map_with),
        Fault::SkipGToggle => {
            involutions::check_pairing_with(shape, n, |t: &SetValuedTableau, _: &SetValuedTableau| Ok(t.clone()))
        }
    };
    let check = match check {
        Ok(c) => c,
        Err(e) => return errored(Suite::InvolutionG, shape, n, e),
    };
    let fields = json!({
        "count": check.count.to_string(),
        "g_orbits": check.orbits,
        "minimal_unique": check.minimal_is_unique_minimum,
    });
    result(Suite::InvolutionG, shape, n, check.problems, object(fields))
}

fn bialternant(shape: &SkewShape, n: u32) -> InstanceResult {
    let lambda = shape.outer();
    let run = || -> Result<Vec<String>, crate::grothendieck::GrothendieckError> {
        let mut problems = Vec::new();
        let g_tab = grothendieck_tableaux(shape, n)?;
        if grothendieck_bialternant(lambda, n)? != g_tab {
            problems.push("Grothendieck bi-alternant differs from tableaux sum".to_string());
        }
        let s_tab = schur_tableaux(shape, n)?;
        if schur_bialternant(lambda, n)? != s_tab {
            problems.push("Schur bi-alternant differs from tableaux sum".to_string());
        }
        if g_tab.at_beta_zero() != s_tab {
            problems.push("G(x|0) differs from s(x)".to_string());
        }
        Ok(problems)
    };
    match run() {
        Ok(problems) => result(Suite::Bialternant, shape, n, problems, Map::new()),
        Err(e) => errored(Suite::Bialternant, shape, n, e),
    }
}

fn specialization(shape: &SkewShape, n: u32) -> InstanceResult {
    let run = || -> Result<(Vec<String>, Map<String, Value>), Box<dyn std::error::Error>> {
        let mut problems = Vec::new();
        let g = grothendieck_tableaux(shape, n)?;
        let principal = g.specialize_principal();
        if principal != LaurentPoly::monomial(shape.size() as i64, 1) {
            problems.push(format!("principal specialization is {principal}"));
        }
        let signed = signed_excess_count(shape, n)?;
        if !signed.is_one() {
            problems.push(format!("signed count is {signed}"));
        }
        let at_minus_one = value_at_ones(&g, -1)?;
        if !at_minus_one.is_one() {
            problems.push(format!("G(1..1|-1) = {at_minus_one}"));
        }
        let count = count_svt(shape, n);
        let at_one = value_at_ones(&g, 1)?;
        if at_one != Rational::from_integer(BigInt::from(count.clone())) {
            problems.push(format!("G(1..1|1) = {at_one} but count is {count}"));
        }
        if g.is_zero() {
            problems.push("G is zero on a feasible shape".to_string());
        }
        let fields = json!({
            "principal": principal.to_string(),
            "signed_count": signed.to_string(),
            "at_minus_one": at_minus_one.to_string(),
            "count": count.to_string(),
        });
        Ok((problems, object(fields)))
    };
    match run() {
        Ok((problems, fields)) => result(Suite::Specialization, shape, n, problems, fields),
        Err(e) => errored(Suite::Specialization, shape, n, e),
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub max_cells: u32,
    pub max_n: u32,
    pub threads: Option<usize>,
    pub fault: Fault,
}

/// Runs the requested suite(s). Results come back in family order, suite by
/// suite, regardless of how many threads ran them.
pub fn run_suite(opts: &VerifyOptions) -> Vec<InstanceResult> {
    let mut jobs = Vec::new();
    for suite in opts.suite.expand() {
        let family = if suite == Suite::Bialternant {
            straight_family(opts.max_cells, opts.max_n)
        } else {
            skew_family(opts.max_cells, opts.max_n)
        };
        jobs.extend(family.into_iter().map(|(s, n)| (suite, s, n)));
    }
    let work = || -> Vec<InstanceResult> {
        jobs.par_iter().map(|(suite, s, n)| run_instance(*suite, s, *n, opts.fault)).collect()
    };
    with_threads(opts.threads, work)
}

pub(crate) fn with_threads<T: Send>(threads: Option<usize>, work: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(work),
        None => work(),
    }
}

/// The first failing instance, if any.
pub fn first_failure(results: &[InstanceResult]) -> Option<&InstanceResult> {
    results.iter().find(|r| r.status == Status::Fail)
}

/// `Σ` over `results` with a given status.
pub fn tally(results: &[InstanceResult], status: Status) -> usize {
    results.iter().filter(|r| r.status == status).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_order_and_size() {
        let fam = skew_family(2, 2);
        let names: Vec<String> = fam.iter().map(|(s, n)| format!("{s}@{n}")).collect();
        assert_eq!(
            names,
            [
                "()@1", "()@2", "1@1", "1@2", "1/1@1", "1/1@2", "1,1@1", "1,1@2", "1,1/1@1", "1,1/1@2", "1,1/1,1@1",
                "1,1/1,1@2", "2@1", "2@2", "2/1@1", "2/1@2", "2/2@1", "2/2@2"
            ]
        );
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::CONCRETE {
            let opts = VerifyOptions { suite, max_cells: 3, max_n: 2, threads: Some(2), fault: Fault::None };
            let results = run_suite(&opts);
            assert!(first_failure(&results).is_none(), "{suite}: {:?}", first_failure(&results));
            assert!(tally(&results, Status::Pass) > 0);
        }
    }

    #[test]
    fn infeasible_is_skipped() {
        let shape: SkewShape = "1,1".parse().unwrap();
        let r = run_instance(Suite::Parity, &shape, 1, Fault::None);
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.to_json()["status"], "skipped");
    }

    #[test]
    fn fault_is_detected() {
        let opts = VerifyOptions { suite: Suite::InvolutionG, max_cells: 2, max_n: 2, threads: None, fault: Fault::SkipGToggle };
        let results = run_suite(&opts);
        let first = first_failure(&results).expect("fault must be caught");
        assert_eq!(first.shape.to_string(), "1");
        assert_eq!(first.n, 2);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE.into_iter().chain([Suite::All]) {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
