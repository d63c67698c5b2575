//! Monte Carlo drivers over uniform random labeled trees.
//!
//! Every driver draws trial `i` from `Seed::trial_rng(i)`, evaluates the
//! trials (optionally on several threads), and folds the per-trial records
//! in trial order. The summary is therefore a pure function of the config,
//! independent of the worker count.
//!
//! Constructive results are never taken on trust: a balanced verdict is
//! re-checked with [`verify_balanced`] and an equitable coloring with
//! [`verify_strong_k`].

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::balance::{is_balanced_graph, verify_balanced, DegreeSequence};
use crate::equitable::{brute_force_equitable, equitable_k, verify_strong_k};
use crate::error::{Error, Result};
use crate::graph::Tree;
use crate::random::{
    enumerate_labeled_trees, prufer_decode, prufer_encode, random_prufer, stats_from_prufer, Seed, MAX_ENUMERATION_N,
};

/// Version of the summary layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n` for which trees outside the degree bound are searched
/// exhaustively in [`run_equitable_fraction`].
pub const BRUTE_FORCE_MAX_N: usize = 12;

const MAX_FAILURE_EXAMPLES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub trials: u64,
    /// Number of colors; only read by [`run_equitable_fraction`].
    pub k: usize,
    pub seed: Seed,
    /// Worker threads; 1 runs serially.
    pub workers: usize,
}

impl ExperimentConfig {
    pub fn new(n: usize, trials: u64, seed: u64) -> Self {
        ExperimentConfig {
            n,
            trials,
            k: 3,
            seed: Seed(seed),
            workers: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::PreconditionViolated(format!(
                "n must be at least 2, got {}",
                self.n
            )));
        }
        if self.trials == 0 {
            return Err(Error::PreconditionViolated("trials must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::PreconditionViolated("workers must be at least 1".into()));
        }
        Ok(())
    }
}

/// Sample mean and variance of one per-trial quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Observable {
    pub name: String,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    pub reference_mean: Option<f64>,
    pub reference_variance: Option<f64>,
    /// `(mean - reference_mean) / sqrt(reference_variance / trials)`.
    pub z: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    pub schema: u32,
    pub experiment: String,
    pub n: usize,
    pub k: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
    /// Successes over the trials that count (all trials, or the
    /// precondition hits for the equitable run).
    pub fraction_success: f64,
    /// 95% Wilson score interval for `fraction_success`.
    pub wilson_ci: [f64; 2],
    pub observables: Vec<Observable>,
    pub counters: BTreeMap<String, u64>,
    pub metrics: BTreeMap<String, f64>,
    /// Maximum degree -> number of trials.
    pub histogram: BTreeMap<usize, u64>,
    /// Prüfer lines (`P: ...`) of up to ten failing trees, in trial order.
    pub failure_examples: Vec<String>,
}

impl ExperimentSummary {
    fn new(name: &str, cfg: &ExperimentConfig, k: Option<usize>) -> Self {
        ExperimentSummary {
            schema: SCHEMA_VERSION,
            experiment: name.to_string(),
            n: cfg.n,
            k,
            trials: cfg.trials,
            seed: cfg.seed.0,
            successes: 0,
            fraction_success: 0.0,
            wilson_ci: [0.0, 1.0],
            observables: Vec::new(),
            counters: BTreeMap::new(),
            metrics: BTreeMap::new(),
            histogram: BTreeMap::new(),
            failure_examples: Vec::new(),
        }
    }

    fn set_fraction(&mut self, successes: u64, out_of: u64) {
        self.successes = successes;
        if out_of > 0 {
            self.fraction_success = successes as f64 / out_of as f64;
            self.wilson_ci = wilson_interval(successes, out_of);
        }
    }

    fn count(&mut self, key: &str, by: u64) {
        *self.counters.entry(key.to_string()).or_insert(0) += by;
    }

    fn fail_example(&mut self, code: &[usize]) {
        if self.failure_examples.len() < MAX_FAILURE_EXAMPLES {
            self.failure_examples.push(prufer_line(code));
        }
    }

    /// Flat `key,value` rows: scalars, then `observable.<name>.<field>`,
    /// `counter.<name>`, `metric.<name>`, `hist.<degree>` and `failure.<i>`.
    pub fn to_csv(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![
            ("schema".into(), self.schema.to_string()),
            ("experiment".into(), self.experiment.clone()),
            ("n".into(), self.n.to_string()),
            ("k".into(), self.k.map_or(String::new(), |k| k.to_string())),
            ("trials".into(), self.trials.to_string()),
            ("seed".into(), self.seed.to_string()),
            ("successes".into(), self.successes.to_string()),
            ("fraction_success".into(), self.fraction_success.to_string()),
            ("wilson_low".into(), self.wilson_ci[0].to_string()),
            ("wilson_high".into(), self.wilson_ci[1].to_string()),
        ];
        let opt = |x: Option<f64>| x.map_or(String::new(), |v| v.to_string());
        for o in &self.observables {
            let key = |f: &str| format!("observable.{}.{f}", o.name);
            rows.push((key("mean"), o.mean.to_string()));
            rows.push((key("variance"), o.variance.to_string()));
            rows.push((key("reference_mean"), opt(o.reference_mean)));
            rows.push((key("reference_variance"), opt(o.reference_variance)));
            rows.push((key("z"), opt(o.z)));
        }
        rows.extend(
            self.counters
                .iter()
                .map(|(k, v)| (format!("counter.{k}"), v.to_string())),
        );
        rows.extend(self.metrics.iter().map(|(k, v)| (format!("metric.{k}"), v.to_string())));
        rows.extend(self.histogram.iter().map(|(k, v)| (format!("hist.{k}"), v.to_string())));
        rows.extend(
            self.failure_examples
                .iter()
                .enumerate()
                .map(|(i, f)| (format!("failure.{i}"), f.clone())),
        );
        let mut out = String::from("key,value\n");
        for (k, v) in rows {
            out.push_str(&format!("{k},{v}\n"));
        }
        out
    }
}

/// 95% Wilson score interval for `successes` out of `n`.
pub fn wilson_interval(successes: u64, n: u64) -> [f64; 2] {
    if n == 0 {
        return [0.0, 1.0];
    }
    let z = 1.959_963_984_540_054_f64;
    let nf = n as f64;
    let p = successes as f64 / nf;
    let denom = 1.0 + z * z / nf;
    let center = (p + z * z / (2.0 * nf)) / denom;
    let half = z * (p * (1.0 - p) / nf + z * z / (4.0 * nf * nf)).sqrt() / denom;
    // Guard the endpoints against rounding at p = 0 or 1.
    [(center - half).max(0.0).min(p), (center + half).min(1.0).max(p)]
}

/// Tree-file line for a Prüfer sequence.
pub fn prufer_line(code: &[usize]) -> String {
    let mut s = String::from("P:");
    for a in code {
        s.push_str(&format!(" {a}"));
    }
    s
}

/// Evaluates `f(trial, code)` for every trial and returns the results in
/// trial order.
fn run_trials<T, F>(cfg: &ExperimentConfig, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[usize]) -> T + Sync,
{
    let one = |i: u64| {
        let code = random_prufer(cfg.n, &mut cfg.seed.trial_rng(i));
        f(&code)
    };
    if cfg.workers == 1 {
        return Ok((0..cfg.trials).map(one).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(|| (0..cfg.trials).into_par_iter().map(one).collect()))
}

fn moments(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = if values.len() > 1 {
        values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
    } else {
        0.0
    };
    (mean, var)
}

fn observable(name: &str, values: &[f64], reference: Option<(f64, f64)>) -> Observable {
    let (mean, variance) = moments(values);
    let z = reference.and_then(|(m, v)| (v > 0.0).then(|| (mean - m) / (v / values.len() as f64).sqrt()));
    Observable {
        name: name.to_string(),
        mean,
        variance,
        reference_mean: reference.map(|r| r.0),
        reference_variance: reference.map(|r| r.1),
        z,
    }
}

struct BalanceTrial {
    balanced: bool,
    certified: bool,
    ones_twos_applicable: bool,
    value: u64,
    max_degree: usize,
    code: Vec<usize>,
}

/// Fraction of uniform random trees on `n` vertices that are balanced.
pub fn run_balanced_fraction(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    cfg.validate()?;
    let n = cfg.n;
    let records = run_trials(cfg, |code| {
        let t = prufer_decode(code, n).expect("sampled codes are valid");
        let seq = DegreeSequence::of_graph(&t).expect("trees on 2+ vertices have no isolated vertex");
        let value = crate::balance::balance_exact(&seq).expect("nonempty").value;
        let coloring = is_balanced_graph(&t);
        let certified = coloring
            .as_ref()
            .is_some_and(|c| verify_balanced(&t, c).is_ok_and(|r| r.balanced));
        BalanceTrial {
            balanced: coloring.is_some(),
            certified,
            ones_twos_applicable: seq.ones() >= seq.max() as usize && seq.twos() >= seq.max() as usize,
            value,
            max_degree: seq.max() as usize,
            code: code.to_vec(),
        }
    })?;
    let mut s = ExperimentSummary::new("balanced", cfg, None);
    let mut ok = 0;
    let mut values = Vec::with_capacity(records.len());
    for r in &records {
        values.push(r.value as f64);
        *s.histogram.entry(r.max_degree).or_insert(0) += 1;
        s.count("ones_twos_applicable", r.ones_twos_applicable as u64);
        if r.balanced && !r.certified {
            s.count("certificate_rejected", 1);
        }
        if r.balanced && r.certified {
            ok += 1;
        } else {
            s.fail_example(&r.code);
        }
    }
    s.count("balanced", ok);
    s.count("unbalanced", cfg.trials - ok);
    s.set_fraction(ok, cfg.trials);
    s.observables.push(observable("balance", &values, None));
    if n <= MAX_ENUMERATION_N {
        // Compare against the exact fraction over all labeled trees.
        let (b, total) = exact_balanced_count(n)?;
        let p = b as f64 / total as f64;
        s.metrics.insert("exact_fraction".into(), p);
        let sd = (p * (1.0 - p) / cfg.trials as f64).sqrt();
        let z = if sd > 0.0 { (s.fraction_success - p) / sd } else { 0.0 };
        s.metrics.insert("exact_z".into(), z);
    }
    Ok(s)
}

/// Number of balanced trees among all `n^(n-2)` labeled trees, `n <= 8`.
pub fn exact_balanced_count(n: usize) -> Result<(u64, u64)> {
    let mut balanced = 0;
    let mut total = 0;
    for t in enumerate_labeled_trees(n)? {
        total += 1;
        if is_balanced_graph(&t).is_some() {
            balanced += 1;
        }
    }
    Ok((balanced, total))
}

enum EquitableTrial {
    Success,
    Failure,
    MissBruteFound,
    MissBruteNone,
    Miss,
}

/// Success rate of [`equitable_k`] on random trees within its degree bound,
/// with the bound's hit rate reported separately.
///
/// Trees with `k * maxdeg > n` are not failures: they are searched
/// exhaustively when `n <= 12` and only counted otherwise.
pub fn run_equitable_fraction(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    cfg.validate()?;
    let (n, k) = (cfg.n, cfg.k);
    if k < 3 {
        return Err(Error::PreconditionViolated(format!("k must be at least 3, got {k}")));
    }
    let records = run_trials(cfg, |code| {
        let t = prufer_decode(code, n).expect("sampled codes are valid");
        let trial = if k * t.max_degree() <= n {
            match equitable_k(&t, k) {
                Ok(c) if verify_strong_k(&t, &c).is_ok_and(|cert| cert.valid) => EquitableTrial::Success,
                Ok(_) | Err(_) => EquitableTrial::Failure,
            }
        } else if n <= BRUTE_FORCE_MAX_N {
            match brute_force_equitable(&t, k) {
                Ok(Some(_)) => EquitableTrial::MissBruteFound,
                _ => EquitableTrial::MissBruteNone,
            }
        } else {
            EquitableTrial::Miss
        };
        (trial, t.max_degree(), code.to_vec())
    })?;
    let mut s = ExperimentSummary::new("equitable", cfg, Some(k));
    let (mut hits, mut ok) = (0, 0);
    for (trial, max_degree, code) in &records {
        *s.histogram.entry(*max_degree).or_insert(0) += 1;
        match trial {
            EquitableTrial::Success => {
                hits += 1;
                ok += 1;
            }
            EquitableTrial::Failure => {
                hits += 1;
                s.fail_example(code);
            }
            EquitableTrial::MissBruteFound => s.count("miss_brute_force_found", 1),
            EquitableTrial::MissBruteNone => s.count("miss_brute_force_none", 1),
            EquitableTrial::Miss => {}
        }
    }
    s.count("precondition_hits", hits);
    s.count("precondition_misses", cfg.trials - hits);
    s.count("failures", hits - ok);
    s.metrics.insert("hit_rate".into(), hits as f64 / cfg.trials as f64);
    s.set_fraction(ok, hits);
    Ok(s)
}

/// `ln n / ln ln n`, defined for `n >= 3`.
pub fn max_degree_scale(n: usize) -> Option<f64> {
    let l = (n as f64).ln();
    (n >= 3 && l.ln() > 0.0).then(|| l / l.ln())
}

/// Means and variances of the leaf count `X1` and degree-2 count `X2`,
/// against `n/e`, `(n/e)(1 - 2/e)` and `(n/e)(1 - 1/e)`.
///
/// A trial succeeds when both counts reach `2 ln n / ln ln n`; the rate of
/// the opposite is reported as `metric.low_count_rate`.
pub fn run_degree_stats(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    cfg.validate()?;
    let n = cfg.n;
    let records = run_trials(cfg, |code| stats_from_prufer(code, n))?;
    let mut s = ExperimentSummary::new("degrees", cfg, None);
    let x1: Vec<f64> = records.iter().map(|r| r.x1 as f64).collect();
    let x2: Vec<f64> = records.iter().map(|r| r.x2 as f64).collect();
    let e = std::f64::consts::E;
    let mu = n as f64 / e;
    s.observables
        .push(observable("x1", &x1, Some((mu, mu * (1.0 - 2.0 / e)))));
    s.observables
        .push(observable("x2", &x2, Some((mu, mu * (1.0 - 1.0 / e)))));
    for o in s.observables.clone() {
        s.metrics.insert(format!("{}_mean_over_n", o.name), o.mean / n as f64);
        s.metrics
            .insert(format!("{}_variance_over_n", o.name), o.variance / n as f64);
    }
    let threshold = max_degree_scale(n).map(|l| 2.0 * l);
    let mut ok = 0;
    for (r, code_index) in records.iter().zip(0u64..) {
        *s.histogram.entry(r.max_degree).or_insert(0) += 1;
        let fine = threshold.is_none_or(|th| r.x1 as f64 >= th && r.x2 as f64 >= th);
        if fine {
            ok += 1;
        } else if s.failure_examples.len() < MAX_FAILURE_EXAMPLES {
            let code = random_prufer(n, &mut cfg.seed.trial_rng(code_index));
            s.fail_example(&code);
        }
    }
    if let Some(th) = threshold {
        s.metrics.insert("low_count_threshold".into(), th);
    }
    s.metrics
        .insert("low_count_rate".into(), (cfg.trials - ok) as f64 / cfg.trials as f64);
    s.set_fraction(ok, cfg.trials);
    Ok(s)
}

/// Distribution of the maximum degree against `L = ln n / ln ln n`.
///
/// A trial succeeds when `0.9 L <= maxdeg <= 3 ln n`. The narrower band
/// `[0.9 L, 1.1 L]` only holds in the limit and is reported as
/// `metric.tight_band_fraction`.
pub fn run_max_degree(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    cfg.validate()?;
    let n = cfg.n;
    let records = run_trials(cfg, |code| stats_from_prufer(code, n).max_degree)?;
    let mut s = ExperimentSummary::new("maxdeg", cfg, None);
    let values: Vec<f64> = records.iter().map(|&d| d as f64).collect();
    s.observables.push(observable("max_degree", &values, None));
    for &d in &records {
        *s.histogram.entry(d).or_insert(0) += 1;
    }
    let Some(l) = max_degree_scale(n) else {
        s.set_fraction(cfg.trials, cfg.trials);
        return Ok(s);
    };
    let (lo, tight_hi, wide_hi) = (0.9 * l, 1.1 * l, 3.0 * (n as f64).ln());
    let mut ok = 0;
    let mut tight = 0;
    for (i, &d) in records.iter().enumerate() {
        let d = d as f64;
        tight += (lo <= d && d <= tight_hi) as u64;
        if lo <= d && d <= wide_hi {
            ok += 1;
        } else if s.failure_examples.len() < MAX_FAILURE_EXAMPLES {
            let code = random_prufer(n, &mut cfg.seed.trial_rng(i as u64));
            s.fail_example(&code);
        }
    }
    s.metrics.insert("scale".into(), l);
    s.metrics.insert("band_low".into(), lo);
    s.metrics.insert("tight_band_high".into(), tight_hi);
    s.metrics.insert("wide_band_high".into(), wide_hi);
    s.metrics
        .insert("tight_band_fraction".into(), tight as f64 / cfg.trials as f64);
    s.set_fraction(ok, cfg.trials);
    Ok(s)
}

/// Prüfer line of a tree, for reports.
pub fn tree_line(t: &Tree) -> String {
    prufer_line(&prufer_encode(t))
}
