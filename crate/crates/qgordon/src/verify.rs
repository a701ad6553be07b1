//! Orchestration of the verification suites across configurable
//! (k, order, jmax), with deterministic, machine- and human-readable
//! reports.
//!
//! Failures never abort a run: every requested check executes and yields a
//! [`CheckRecord`], so one report localizes every discrepancy. Records are
//! sorted by (suite, k, j, i, l, order) and the renderers are pure
//! functions of the record list, so identical configurations produce
//! byte-identical reports regardless of how many worker threads computed
//! them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::check::{Mismatch, Verdict};
use crate::error::{param_err, Error, Result};
use crate::gordon::{
    closed_form_h, generate_sequence, h_equality_check, product_g, sequence_for_target,
    sum_form_g, triple_product_check, GSequence, GordonIndex, SumForm,
};
use crate::matrices::{expand_g_check, h_matrix, h_matrix_by_recursion, step_check, verify_inverse};
use crate::partitions::{gf_gordon, gf_h_entry, gf_tail, multiplicity_split_check, uniqueness_check};

/// Enumeration-backed suites cap their order and depth at the values the
/// combinatorial oracle can enumerate quickly.
pub const ENUMERATION_ORDER_CAP: usize = 60;
pub const ENUMERATION_DEPTH_CAP: usize = 8;

/// The eight check families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Products,
    TripleProduct,
    ClosedForm,
    Recursion,
    Empirical,
    Matrices,
    Partitions,
    Uniqueness,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Products,
        Suite::TripleProduct,
        Suite::ClosedForm,
        Suite::Recursion,
        Suite::Empirical,
        Suite::Matrices,
        Suite::Partitions,
        Suite::Uniqueness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Products => "products",
            Suite::TripleProduct => "triple_product",
            Suite::ClosedForm => "closed_form",
            Suite::Recursion => "recursion",
            Suite::Empirical => "empirical",
            Suite::Matrices => "matrices",
            Suite::Partitions => "partitions",
            Suite::Uniqueness => "uniqueness",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::ParamOutOfRange(format!(
                    "unknown suite '{s}'; expected one of: {}",
                    Suite::ALL.map(Suite::name).join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            other => param_err(format!("unknown format '{other}'; expected text or json")),
        }
    }
}

/// What to verify and how deep.
#[derive(Debug, Clone)]
pub struct VerificationConfig {
    pub k_values: Vec<usize>,
    /// Truncation order N for the series suites.
    pub order: usize,
    /// Recursion depth.
    pub jmax: usize,
    pub suites: Vec<Suite>,
    pub format: ReportFormat,
    /// Worker count; `None` lets the global thread pool decide. Not part
    /// of the report, which must not depend on scheduling.
    pub parallelism: Option<usize>,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        Self {
            k_values: vec![2, 3, 4, 5],
            order: 200,
            jmax: 20,
            suites: Suite::ALL.to_vec(),
            format: ReportFormat::Text,
            parallelism: None,
        }
    }
}

impl VerificationConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_values.is_empty() {
            return param_err("at least one k value is required".to_string());
        }
        for &k in &self.k_values {
            if k < 2 {
                return param_err(format!("k must be >= 2, got {k}"));
            }
        }
        if self.order < 1 {
            return param_err("order must be >= 1".to_string());
        }
        if self.suites.is_empty() {
            return param_err("at least one suite is required".to_string());
        }
        Ok(())
    }

    /// Suites in canonical order, deduplicated.
    fn normalized_suites(&self) -> Vec<Suite> {
        let mut suites: Vec<Suite> = Suite::ALL
            .into_iter()
            .filter(|s| self.suites.contains(s))
            .collect();
        suites.dedup();
        suites
    }

    fn sorted_k(&self) -> Vec<usize> {
        let mut k = self.k_values.clone();
        k.sort_unstable();
        k.dedup();
        k
    }
}

/// Identifying parameters of one check instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub k: usize,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub l: Option<usize>,
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    fn name(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One executed (or skipped) check.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    pub suite: Suite,
    pub params: CheckParams,
    pub status: CheckStatus,
    pub witness: Option<Mismatch>,
    pub reason: Option<String>,
}

impl CheckRecord {
    fn from_verdict(suite: Suite, params: CheckParams, verdict: Verdict) -> Self {
        match verdict {
            Verdict::Pass => Self {
                suite,
                params,
                status: CheckStatus::Pass,
                witness: None,
                reason: None,
            },
            Verdict::Fail(m) => Self {
                suite,
                params,
                status: CheckStatus::Fail,
                witness: Some(m),
                reason: None,
            },
        }
    }

    fn skipped(suite: Suite, params: CheckParams, reason: String) -> Self {
        Self {
            suite,
            params,
            status: CheckStatus::Skipped,
            witness: None,
            reason: Some(reason),
        }
    }

    fn sort_key(&self) -> (Suite, usize, Option<usize>, Option<usize>, Option<usize>, Option<usize>) {
        (
            self.suite,
            self.params.k,
            self.params.j,
            self.params.i,
            self.params.l,
            self.params.order,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

/// Tallies a record list.
pub fn summarize(records: &[CheckRecord]) -> Summary {
    let mut s = Summary {
        pass: 0,
        fail: 0,
        skipped: 0,
    };
    for r in records {
        match r.status {
            CheckStatus::Pass => s.pass += 1,
            CheckStatus::Fail => s.fail += 1,
            CheckStatus::Skipped => s.skipped += 1,
        }
    }
    s
}

/// Runs every configured (suite, k) pair and returns the sorted records.
/// Configuration problems are reported before any check runs.
pub fn run_verification(config: &VerificationConfig) -> Result<Vec<CheckRecord>> {
    config.validate()?;
    let ks = config.sorted_k();
    let suites = config.normalized_suites();

    // The recursion-generated sequence is shared by several suites;
    // compute it once per k. A NotDivisible from generation is itself a
    // reportable outcome, so keep the error value.
    let needs_sequence = suites.iter().any(|s| {
        matches!(
            s,
            Suite::Recursion | Suite::Empirical | Suite::Matrices
        )
    });
    let sequences: BTreeMap<usize, Arc<Result<GSequence>>> = if needs_sequence {
        ks.par_iter()
            .map(|&k| (k, Arc::new(generate_sequence(k, config.jmax, config.order))))
            .collect()
    } else {
        BTreeMap::new()
    };

    let tasks: Vec<(usize, Suite)> = ks
        .iter()
        .flat_map(|&k| suites.iter().map(move |&s| (k, s)))
        .collect();

    let mut records: Vec<CheckRecord> = tasks
        .into_par_iter()
        .flat_map(|(k, suite)| {
            let seq = sequences.get(&k).cloned();
            run_suite(k, suite, config, seq.as_deref())
        })
        .collect();

    records.sort_by_key(CheckRecord::sort_key);
    Ok(records)
}

fn run_suite(
    k: usize,
    suite: Suite,
    config: &VerificationConfig,
    seq: Option<&Result<GSequence>>,
) -> Vec<CheckRecord> {
    match suite {
        Suite::Products => products_suite(k, config.order),
        Suite::TripleProduct => triple_product_suite(k, config.order),
        Suite::ClosedForm => closed_form_suite(k, config.jmax, config.order),
        Suite::Recursion => recursion_suite(k, config.order, seq.expect("sequence precomputed")),
        Suite::Empirical => empirical_suite(k, seq.expect("sequence precomputed")),
        Suite::Matrices => matrices_suite(k, config.jmax, seq.expect("sequence precomputed")),
        Suite::Partitions => partitions_suite(k, config),
        Suite::Uniqueness => uniqueness_suite(k, config),
    }
}

fn params_ki(k: usize, i: usize, order: usize) -> CheckParams {
    CheckParams {
        k,
        i: Some(i),
        order: Some(order),
        ..CheckParams::default()
    }
}

/// Three-way agreement of the product side with both theta-quotient forms
/// and the depth-0 closed form.
fn products_suite(k: usize, order: usize) -> Vec<CheckRecord> {
    (1..=k)
        .map(|i| {
            let params = params_ki(k, i, order);
            let verdict = (|| -> Result<Verdict> {
                let product = product_g(k, i, order)?;
                let first = sum_form_g(k, i, order, SumForm::First)?;
                let second = sum_form_g(k, i, order, SumForm::Second)?;
                let closed = closed_form_h(k, 0, i, order)?;
                Ok(Verdict::from(product.agrees_with(&first))
                    .and(product.agrees_with(&second).into())
                    .and(product.agrees_with(&closed).into()))
            })();
            verdict_record(Suite::Products, params, verdict)
        })
        .collect()
}

fn triple_product_suite(k: usize, order: usize) -> Vec<CheckRecord> {
    (1..=k)
        .map(|i| {
            verdict_record(
                Suite::TripleProduct,
                params_ki(k, i, order),
                triple_product_check(k, i, order),
            )
        })
        .collect()
}

fn closed_form_suite(k: usize, jmax: usize, order: usize) -> Vec<CheckRecord> {
    (1..=jmax)
        .map(|j| {
            let params = CheckParams {
                k,
                j: Some(j),
                order: Some(order),
                ..CheckParams::default()
            };
            verdict_record(Suite::ClosedForm, params, h_equality_check(k, j, order))
        })
        .collect()
}

/// Converts a check result into a record: failures carry their witness,
/// precision problems become skips, anything else is a hard error that
/// should not occur with validated parameters.
fn verdict_record(suite: Suite, params: CheckParams, verdict: Result<Verdict>) -> CheckRecord {
    match verdict {
        Ok(v) => CheckRecord::from_verdict(suite, params, v),
        Err(e @ (Error::PrecisionExhausted { .. } | Error::InsufficientPrecision { .. })) => {
            CheckRecord::skipped(suite, params, e.to_string())
        }
        Err(e @ (Error::NotDivisible { .. } | Error::NegativeExponentResidue { .. })) => {
            let witness = divisibility_witness(&e);
            CheckRecord {
                suite,
                params,
                status: CheckStatus::Fail,
                witness,
                reason: Some(e.to_string()),
            }
        }
        Err(e) => CheckRecord {
            suite,
            params,
            status: CheckStatus::Fail,
            witness: None,
            reason: Some(format!("internal error: {e}")),
        },
    }
}

fn divisibility_witness(e: &Error) -> Option<Mismatch> {
    match e {
        Error::NotDivisible {
            exponent,
            coefficient,
            ..
        } => Some(Mismatch {
            exponent: *exponent as i64,
            lhs: coefficient.clone(),
            rhs: BigInt::from(0),
        }),
        Error::NegativeExponentResidue {
            exponent,
            coefficient,
        } => Some(Mismatch {
            exponent: *exponent,
            lhs: coefficient.clone(),
            rhs: BigInt::from(0),
        }),
        _ => None,
    }
}

/// Recursion entries against the closed form at every canonical index,
/// to the precision each entry still carries.
fn recursion_suite(k: usize, order: usize, seq: &Result<GSequence>) -> Vec<CheckRecord> {
    let seq = match seq {
        Ok(seq) => seq,
        Err(e) => return vec![sequence_failure_record(Suite::Recursion, k, e)],
    };
    (1..=seq.requested_last_index())
        .map(|s| {
            let idx = GordonIndex::from_linear(k, s).expect("validated");
            let params = CheckParams {
                k,
                j: Some(idx.j()),
                i: Some(idx.i()),
                order: Some(order),
                ..CheckParams::default()
            };
            match seq.get(s) {
                Some(entry) => {
                    let verdict = closed_form_h(k, idx.j(), idx.i(), entry.precision())
                        .map(|h| Verdict::from(entry.agrees_with(&h)));
                    verdict_record(Suite::Recursion, params, verdict)
                }
                None => CheckRecord::skipped(
                    Suite::Recursion,
                    params,
                    format!(
                        "precision exhausted before G_{s}: cumulative division \
                         exponents exceed order {order}"
                    ),
                ),
            }
        })
        .collect()
}

fn sequence_failure_record(suite: Suite, k: usize, e: &Error) -> CheckRecord {
    CheckRecord {
        suite,
        params: CheckParams {
            k,
            ..CheckParams::default()
        },
        status: CheckStatus::Fail,
        witness: divisibility_witness(e),
        reason: Some(format!("sequence generation failed: {e}")),
    }
}

fn empirical_suite(k: usize, seq: &Result<GSequence>) -> Vec<CheckRecord> {
    let seq = match seq {
        Ok(seq) => seq,
        Err(e) => return vec![sequence_failure_record(Suite::Empirical, k, e)],
    };
    (1..=seq.requested_last_index())
        .map(|s| {
            let idx = GordonIndex::from_linear(k, s).expect("validated");
            let params = CheckParams {
                k,
                j: Some(idx.j()),
                i: Some(idx.i()),
                ..CheckParams::default()
            };
            let outcome = seq.empirical_check(idx.j(), idx.i()).map(|result| {
                if result.passes() {
                    Verdict::Pass
                } else {
                    let d = result
                        .observed_order
                        .expect("a failing check observed a low order");
                    let g = seq.entry(s).expect("entry exists");
                    let lhs = if d == 0 {
                        g.coeff(0) - BigInt::one()
                    } else {
                        g.coeff(d).clone()
                    };
                    Verdict::Fail(Mismatch {
                        exponent: d as i64,
                        lhs,
                        rhs: BigInt::from(0),
                    })
                }
            });
            verdict_record(Suite::Empirical, params, outcome)
        })
        .collect()
}

/// Per (k, j): the exact inverse identity, the two h-matrix code paths,
/// and the two series-level identities (step and expansion). The exact
/// subchecks always run; the series subchecks are skipped once the
/// sequence no longer reaches level j.
fn matrices_suite(k: usize, jmax: usize, seq: &Result<GSequence>) -> Vec<CheckRecord> {
    (1..=jmax)
        .map(|j| {
            let params = CheckParams {
                k,
                j: Some(j),
                ..CheckParams::default()
            };
            let exact = (|| -> Result<Verdict> {
                let inverse = verify_inverse(k, j)?;
                let paths = Verdict::from(
                    h_matrix(k, j)?.mismatch_with(&h_matrix_by_recursion(k, j)?),
                );
                Ok(inverse.and(paths))
            })();
            let exact = match exact {
                Ok(v) => v,
                Err(e) => return verdict_record(Suite::Matrices, params, Err(e)),
            };
            if let Verdict::Fail(m) = exact {
                return CheckRecord::from_verdict(Suite::Matrices, params, Verdict::Fail(m));
            }
            let series_part = match seq {
                Ok(seq) if seq.level_available(j) => {
                    step_check(seq, j).and_then(|v| Ok(v.and(expand_g_check(seq, j)?)))
                }
                Ok(_) => Err(Error::PrecisionExhausted {
                    needed: (k - 1) * j + k,
                    available: seq.as_ref().map(|s| s.last_index()).unwrap_or(0),
                }),
                Err(e) => Err(e.clone()),
            };
            match series_part {
                Ok(v) => CheckRecord::from_verdict(Suite::Matrices, params, v),
                Err(Error::PrecisionExhausted { .. }) => CheckRecord::skipped(
                    Suite::Matrices,
                    params,
                    format!(
                        "level {j} not reachable at this order; exact inverse and \
                         h-path subchecks passed"
                    ),
                ),
                Err(e) => verdict_record(Suite::Matrices, params, Err(e)),
            }
        })
        .collect()
}

/// Enumeration-backed checks: the Gordon identities themselves, the
/// combinatorial h-entries, the tail interpretation and the multiplicity
/// split. Order and depth are capped so the oracle stays fast.
fn partitions_suite(k: usize, config: &VerificationConfig) -> Vec<CheckRecord> {
    let order = config.order.min(ENUMERATION_ORDER_CAP);
    let jmax = config.jmax.min(ENUMERATION_DEPTH_CAP);
    let mut records = Vec::new();

    for i in 1..=k {
        let verdict = (|| -> Result<Verdict> {
            let enumerated = gf_gordon(k, i, order)?;
            let product = product_g(k, i, order)?;
            Ok(enumerated.agrees_with(&product).into())
        })();
        records.push(verdict_record(
            Suite::Partitions,
            params_ki(k, i, order),
            verdict,
        ));
    }

    let seq = sequence_for_target(k, jmax, order);

    for j in 1..=jmax {
        for i in 1..=k {
            // one record per h^(j) row: entries l = 1..=k
            let verdict = (|| -> Result<Verdict> {
                let h = h_matrix(k, j)?;
                let mut v = Verdict::Pass;
                for l in 1..=k {
                    let combinatorial = gf_h_entry(k, i, j, l)?;
                    v = v.and(combinatorial.mismatch_with(h.entry(i - 1, l - 1)).into());
                }
                Ok(v)
            })();
            let params = CheckParams {
                k,
                i: Some(i),
                j: Some(j),
                ..CheckParams::default()
            };
            records.push(verdict_record(Suite::Partitions, params, verdict));
        }
    }

    for j in 0..=jmax {
        for l in 1..=k {
            let params = CheckParams {
                k,
                j: Some(j),
                l: Some(l),
                order: Some(order),
                ..CheckParams::default()
            };
            let verdict = seq.as_ref().map_err(Error::clone).and_then(|seq| {
                let tail = gf_tail(k, j, l, order)?;
                let entry = seq.entry((k - 1) * j + l)?;
                Ok(Verdict::from(tail.agrees_with(entry)))
            });
            records.push(verdict_record(Suite::Partitions, params, verdict));
        }
    }

    for j in 1..=jmax {
        for i in 1..=k {
            let params = CheckParams {
                k,
                i: Some(i),
                j: Some(j),
                order: Some(order),
                ..CheckParams::default()
            };
            records.push(verdict_record(
                Suite::Partitions,
                params,
                multiplicity_split_check(k, i, j, order),
            ));
        }
    }

    records
}

fn uniqueness_suite(k: usize, config: &VerificationConfig) -> Vec<CheckRecord> {
    let order = config.order.min(ENUMERATION_ORDER_CAP);
    let jmax = config.jmax.clamp(1, ENUMERATION_DEPTH_CAP);
    let params = CheckParams {
        k,
        j: Some(jmax),
        order: Some(order),
        ..CheckParams::default()
    };
    vec![verdict_record(
        Suite::Uniqueness,
        params,
        uniqueness_check(k, jmax, order),
    )]
}

#[derive(Serialize)]
struct ConfigJson {
    k: Vec<usize>,
    order: usize,
    jmax: usize,
    suites: Vec<&'static str>,
}

#[derive(Serialize)]
struct ParamsJson {
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

#[derive(Serialize)]
struct WitnessJson {
    exponent: i64,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct CheckJson {
    suite: &'static str,
    params: ParamsJson,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

#[derive(Serialize)]
struct ReportJson {
    config: ConfigJson,
    checks: Vec<CheckJson>,
    summary: Summary,
}

/// Renders the report. The JSON schema has stable field names:
/// `config {k, order, jmax, suites[]}`,
/// `checks [{suite, params{k,i,j,l,n}, status, witness{exponent,lhs,rhs}?, reason?}]`,
/// `summary {pass, fail, skipped}`.
pub fn render_report(
    config: &VerificationConfig,
    records: &[CheckRecord],
    format: ReportFormat,
) -> String {
    match format {
        ReportFormat::Json => render_json(config, records),
        ReportFormat::Text => render_text(records),
    }
}

fn render_json(config: &VerificationConfig, records: &[CheckRecord]) -> String {
    let report = ReportJson {
        config: ConfigJson {
            k: config.sorted_k(),
            order: config.order,
            jmax: config.jmax,
            suites: config.normalized_suites().iter().map(|s| s.name()).collect(),
        },
        checks: records
            .iter()
            .map(|r| CheckJson {
                suite: r.suite.name(),
                params: ParamsJson {
                    k: r.params.k,
                    i: r.params.i,
                    j: r.params.j,
                    l: r.params.l,
                    n: r.params.order,
                },
                status: r.status.name(),
                witness: r.witness.as_ref().map(|m| WitnessJson {
                    exponent: m.exponent,
                    lhs: m.lhs.to_string(),
                    rhs: m.rhs.to_string(),
                }),
                reason: r.reason.clone(),
            })
            .collect(),
        summary: summarize(records),
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

fn render_text(records: &[CheckRecord]) -> String {
    fn opt(v: Option<usize>) -> String {
        v.map_or_else(|| "-".to_string(), |x| x.to_string())
    }
    let mut rows: Vec<[String; 7]> = vec![[
        "suite".into(),
        "k".into(),
        "j".into(),
        "i".into(),
        "l".into(),
        "order".into(),
        "status".into(),
    ]];
    let mut details: Vec<String> = vec![String::new()];
    for r in records {
        rows.push([
            r.suite.name().to_string(),
            r.params.k.to_string(),
            opt(r.params.j),
            opt(r.params.i),
            opt(r.params.l),
            opt(r.params.order),
            r.status.name().to_string(),
        ]);
        let mut detail = String::new();
        if let Some(w) = &r.witness {
            detail.push_str(&format!("witness {w}"));
        }
        if let Some(reason) = &r.reason {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(reason);
        }
        details.push(detail);
    }
    let mut widths = [0usize; 7];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for (row, detail) in rows.iter().zip(&details) {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(widths) {
            line.push_str(&format!("{cell:<w$}  "));
        }
        let line = line.trim_end().to_string();
        out.push_str(&line);
        if !detail.is_empty() {
            out.push_str("  ");
            out.push_str(detail);
        }
        out.push('\n');
    }
    let s = summarize(records);
    out.push_str(&format!(
        "summary: {} pass, {} fail, {} skipped\n",
        s.pass, s.fail, s.skipped
    ));
    out
}

/// Side-by-side inspection of one series: the recursion route and the
/// closed-form route, with their agreement status. The recursion runs at
/// a raised working precision so the displayed entry is exact to `order`.
pub fn series_inspect(k: usize, s: usize, order: usize) -> Result<String> {
    let idx = GordonIndex::from_linear(k, s)?;
    let closed = closed_form_h(k, idx.j(), idx.i(), order)?;
    let seq = sequence_for_target(k, idx.j(), order)?;
    let entry = seq.entry(s)?.truncate(order);
    let route = if s <= k { "product" } else { "recursion" };
    let mut out = String::new();
    out.push_str(&format!("{idx}, order {order}\n"));
    out.push_str(&format!("{route:<11} {entry}\n"));
    out.push_str(&format!("closed form {closed}\n"));
    match entry.agrees_with(&closed) {
        None => out.push_str(&format!("agreement: pass to q^{order}\n")),
        Some(m) => out.push_str(&format!("agreement: FAIL at {m}\n")),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_config(suites: Vec<Suite>) -> VerificationConfig {
        VerificationConfig {
            k_values: vec![2],
            order: 30,
            jmax: 3,
            suites,
            format: ReportFormat::Json,
            parallelism: None,
        }
    }

    #[test]
    fn triple_product_records_per_i() {
        let mut config = small_config(vec![Suite::TripleProduct]);
        config.k_values = vec![3];
        config.order = 100;
        let records = run_verification(&config).unwrap();
        assert_eq!(records.len(), 3);
        assert!(records.iter().all(|r| r.status == CheckStatus::Pass));
        assert_eq!(records[0].params.i, Some(1));
        assert_eq!(records[2].params.i, Some(3));
    }

    #[test]
    fn forced_precision_failure_is_skipped() {
        let mut config = small_config(vec![Suite::Recursion]);
        config.order = 2;
        config.jmax = 5;
        let records = run_verification(&config).unwrap();
        let skipped: Vec<_> = records
            .iter()
            .filter(|r| r.status == CheckStatus::Skipped)
            .collect();
        assert!(!skipped.is_empty());
        assert!(skipped[0].reason.as_deref().unwrap().contains("precision"));
        // computed prefix still passes
        assert!(records
            .iter()
            .filter(|r| r.status != CheckStatus::Skipped)
            .all(|r| r.status == CheckStatus::Pass));
    }

    #[test]
    fn default_small_run_passes_every_suite() {
        let config = small_config(Suite::ALL.to_vec());
        let records = run_verification(&config).unwrap();
        let summary = summarize(&records);
        assert_eq!(summary.fail, 0);
        assert_eq!(summary.skipped, 0);
        for suite in Suite::ALL {
            assert!(
                records.iter().any(|r| r.suite == suite),
                "missing records for {suite}"
            );
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let config = small_config(vec![Suite::Products, Suite::Matrices]);
        let a = render_report(&config, &run_verification(&config).unwrap(), ReportFormat::Json);
        let b = render_report(&config, &run_verification(&config).unwrap(), ReportFormat::Json);
        assert_eq!(a, b);
    }

    #[test]
    fn empty_record_list_renders() {
        let config = small_config(vec![Suite::Products]);
        let json = render_report(&config, &[], ReportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["summary"]["pass"], 0);
        assert_eq!(v["summary"]["fail"], 0);
        let text = render_report(&config, &[], ReportFormat::Text);
        assert!(text.ends_with("summary: 0 pass, 0 fail, 0 skipped\n"));
    }

    #[test]
    fn failing_record_serializes_witness() {
        let record = CheckRecord {
            suite: Suite::Products,
            params: CheckParams {
                k: 2,
                i: Some(1),
                order: Some(10),
                ..CheckParams::default()
            },
            status: CheckStatus::Fail,
            witness: Some(Mismatch {
                exponent: 4,
                lhs: BigInt::from(7),
                rhs: BigInt::from(8),
            }),
            reason: None,
        };
        let config = small_config(vec![Suite::Products]);
        let json = render_report(&config, &[record], ReportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["summary"]["fail"], 1);
        assert_eq!(v["checks"][0]["witness"]["exponent"], 4);
        assert_eq!(v["checks"][0]["witness"]["lhs"], "7");
        assert_eq!(v["checks"][0]["params"]["n"], 10);
    }

    #[test]
    fn config_validation() {
        let mut config = small_config(vec![Suite::Products]);
        config.k_values = vec![1];
        assert!(run_verification(&config).is_err());
        config.k_values = vec![];
        assert!(run_verification(&config).is_err());
        let mut config = small_config(vec![]);
        config.suites = vec![];
        assert!(run_verification(&config).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn series_inspection_shows_both_routes() {
        let text = series_inspect(2, 3, 9).unwrap();
        assert!(text.contains("recursion"));
        assert!(text.contains("closed form"));
        assert!(text.contains("agreement: pass"));
        assert!(text.contains("1 + q^3 + q^4 + q^5 + q^6 + q^7 + 2*q^8 + 2*q^9"));
        let seed = series_inspect(3, 2, 5).unwrap();
        assert!(seed.contains("product"));
    }
}
