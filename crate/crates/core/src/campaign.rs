//! Seeded batch runs over sampled or constructed instances.
//!
//! Each instance draws its parameters from its own generator seeded by
//! `(seed, index)`, so the report does not depend on how many workers ran
//! the campaign. Records are kept in index order. Timings are only written
//! when asked for, which keeps the default report byte-stable.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{check_bounds_with, CheckOptions, Verdict};
use crate::generators::{
    bht_tight, counterexample, generalized_squid, random_connected_uniform, squid, GsquidSpec,
};
use crate::propagation::{is_k_power_dominating, ForcingRule};
use crate::solvers::{
    k_power_domination_number_within, verify_lemmas_within, LemmaOutcome, LemmaReport, SearchLimits, SizeHypothesis,
};
use crate::{serialize_hgr, Hypergraph, SolveError, VertexSet, VERSION};

pub const REPORT_SCHEMA: &str = "hyperpd.campaign/1";

/// Largest order for which the rule-equivalence probe tries every subset.
pub const EXHAUSTIVE_PROBE_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Random,
    Generators,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Bounds,
    Lemma4,
    Lemma5,
    RuleEquivalence,
}

impl std::str::FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "bounds" => Ok(Check::Bounds),
            "lemma4" => Ok(Check::Lemma4),
            "lemma5" => Ok(Check::Lemma5),
            "rule-equivalence" => Ok(Check::RuleEquivalence),
            other => Err(format!(
                "unknown check {other:?} (expected bounds, lemma4, lemma5 or rule-equivalence)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CampaignConfig {
    pub family: Family,
    pub ranks: Vec<usize>,
    pub n_min: usize,
    pub n_max: usize,
    pub m_min: Option<usize>,
    pub m_max: Option<usize>,
    pub budgets: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
    pub rules: Vec<ForcingRule>,
    pub checks: Vec<Check>,
    /// Also compute γ and judge the dominating-set bounds.
    pub include_gamma: bool,
    pub lemma_hypothesis: SizeHypothesis,
    pub timeout_ms: Option<u64>,
    pub record_timings: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            family: Family::Random,
            ranks: vec![3],
            n_min: 5,
            n_max: 9,
            m_min: None,
            m_max: None,
            budgets: vec![1],
            samples: 100,
            seed: 0,
            rules: vec![ForcingRule::WhiteDegree],
            checks: vec![Check::Bounds],
            include_gamma: false,
            lemma_hypothesis: SizeHypothesis::KPlusThree,
            timeout_ms: Some(60_000),
            record_timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CampaignError {
    #[error("invalid campaign config: {0}")]
    Config(String),
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<(), CampaignError> {
        let bad = |msg: &str| Err(CampaignError::Config(msg.to_string()));
        if self.ranks.is_empty() {
            return bad("ranks must be nonempty");
        }
        if self.budgets.is_empty() {
            return bad("budgets must be nonempty");
        }
        if self.rules.is_empty() {
            return bad("rules must be nonempty");
        }
        if self.checks.is_empty() {
            return bad("checks must be nonempty");
        }
        if self.samples == 0 {
            return bad("samples must be positive");
        }
        if self.n_min > self.n_max || self.n_max == 0 {
            return bad("need 1 <= n_min <= n_max");
        }
        if let (Some(lo), Some(hi)) = (self.m_min, self.m_max) {
            if lo > hi {
                return bad("need m_min <= m_max");
            }
        }
        if self.ranks.iter().any(|&r| r < 2) {
            return bad("ranks must be at least 2");
        }
        if self.family == Family::Random {
            for &r in &self.ranks {
                for &k in &self.budgets {
                    if r + k > self.n_max {
                        return Err(CampaignError::Config(format!(
                            "no order in {}..={} satisfies k + r <= n for r = {r}, k = {k}",
                            self.n_min, self.n_max
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub family: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundVerdicts {
    pub rule: ForcingRule,
    pub gamma_pk: usize,
    pub witness: Vec<usize>,
    pub witness_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    pub verdicts: BTreeMap<String, Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleProbe {
    pub agree: bool,
    pub exhaustive: bool,
    pub sets_checked: u64,
    pub gamma_pk: BTreeMap<String, usize>,
    /// 1-based set observing everything under exactly one rule.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating_set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating_rule: Option<ForcingRule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    TimedOut,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub provenance: Provenance,
    pub n: usize,
    pub m: usize,
    pub r: Option<usize>,
    pub k: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundVerdicts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma4: Option<LemmaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma5: Option<LemmaReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule_equivalence: Option<RuleProbe>,
    /// Full instance text; present whenever something was flagged.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hgr: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl InstanceRecord {
    pub fn violated_bounds(&self) -> Vec<String> {
        self.bounds
            .iter()
            .flat_map(|b| {
                b.verdicts
                    .iter()
                    .filter(|(_, v)| **v == Verdict::Violated)
                    .map(move |(name, _)| format!("{name}@{}", b.rule))
            })
            .collect()
    }

    pub fn lemma_failed(&self) -> bool {
        [&self.lemma4, &self.lemma5]
            .into_iter()
            .flatten()
            .any(LemmaReport::failed)
    }

    pub fn rules_separated(&self) -> bool {
        self.rule_equivalence.as_ref().is_some_and(|p| !p.agree)
    }

    pub fn inconsistent(&self) -> bool {
        self.bounds.iter().any(|b| !b.witness_verified)
    }

    fn flagged(&self) -> bool {
        !self.violated_bounds().is_empty() || self.lemma_failed() || self.rules_separated() || self.inconsistent()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flagged {
    pub index: usize,
    pub finding: String,
    pub k: usize,
    pub provenance: Provenance,
    pub hgr: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub completed: usize,
    pub timed_out: usize,
    pub errors: usize,
    /// bound name -> verdict -> count, per rule.
    pub verdicts: BTreeMap<String, BTreeMap<String, usize>>,
    pub lemma4: BTreeMap<String, usize>,
    pub lemma5: BTreeMap<String, usize>,
    pub rule_separations: usize,
    pub inconsistencies: usize,
    pub violations: Vec<Flagged>,
    pub lemma_failures: Vec<Flagged>,
    pub separations: Vec<Flagged>,
}

impl Summary {
    pub fn violation_count(&self) -> usize {
        self.violations.len()
    }

    /// Count of `VIOLATED` verdicts for one bound across all rules.
    pub fn violated(&self, bound: &str) -> usize {
        self.verdicts
            .iter()
            .filter(|(name, _)| name.split('@').next() == Some(bound))
            .filter_map(|(_, tally)| tally.get("VIOLATED"))
            .sum()
    }

    pub fn line(&self) -> String {
        format!(
            "campaign: {} instances, {} completed, {} timed out, {} errors, {} bound violations, {} lemma failures, {} rule separations, {} inconsistencies",
            self.instances,
            self.completed,
            self.timed_out,
            self.errors,
            self.violations.len(),
            self.lemma_failures.len(),
            self.rule_separations,
            self.inconsistencies
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub config: CampaignConfig,
    pub records: Vec<InstanceRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn run_campaign(config: &CampaignConfig) -> Result<Report, CampaignError> {
    config.validate()?;
    let instances = plan(config)?;
    let records: Vec<InstanceRecord> = instances
        .into_par_iter()
        .map(|inst| run_instance(config, inst))
        .collect();
    let summary = summarize(&records);
    Ok(Report {
        schema: REPORT_SCHEMA,
        version: VERSION,
        config: config.clone(),
        records,
        summary,
    })
}

struct Instance {
    index: usize,
    provenance: Provenance,
    k: usize,
    h: Result<Hypergraph, String>,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn instance_seed(seed: u64, index: usize) -> u64 {
    splitmix(splitmix(seed) ^ index as u64)
}

fn plan(config: &CampaignConfig) -> Result<Vec<Instance>, CampaignError> {
    match config.family {
        Family::Random => Ok((0..config.samples).map(|i| random_instance(config, i)).collect()),
        Family::Generators => {
            let catalog = generator_catalog(config);
            if catalog.is_empty() {
                return Err(CampaignError::Config(
                    "no generator instance fits the rank, budget and order ranges".into(),
                ));
            }
            Ok((0..config.samples)
                .map(|i| {
                    let (provenance, k, h) = catalog[i % catalog.len()].clone();
                    Instance {
                        index: i,
                        provenance,
                        k,
                        h: Ok(h),
                    }
                })
                .collect())
        }
    }
}

fn random_instance(config: &CampaignConfig, index: usize) -> Instance {
    let seed = instance_seed(config.seed, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = config.ranks[rng.gen_range(0..config.ranks.len())];
    let k = config.budgets[rng.gen_range(0..config.budgets.len())];
    let n_lo = config.n_min.max(r + k);
    let n = rng.gen_range(n_lo..=config.n_max);
    let connect = if r > 1 { (n - 1).div_ceil(r - 1) } else { n };
    let m_lo = config.m_min.unwrap_or(0).max(connect).max(1);
    let m_hi = config
        .m_max
        .unwrap_or(2 * n)
        .min(binomial_capped(n, r, 4 * n))
        .max(m_lo);
    let m = rng.gen_range(m_lo..=m_hi);
    let graph_seed = rng.gen::<u64>();

    let mut params = BTreeMap::new();
    params.insert("n".into(), n.to_string());
    params.insert("r".into(), r.to_string());
    params.insert("m".into(), m.to_string());
    params.insert("seed".into(), graph_seed.to_string());
    Instance {
        index,
        provenance: Provenance {
            family: "random".into(),
            params,
        },
        k,
        h: random_connected_uniform(n, r, m, graph_seed).map_err(|e| e.to_string()),
    }
}

fn binomial_capped(n: usize, r: usize, cap: usize) -> usize {
    let mut c: u128 = 1;
    for i in 0..r.min(n - r) {
        c = c * (n - i) as u128 / (i + 1) as u128;
        if c >= cap as u128 {
            return cap;
        }
    }
    c as usize
}

type CatalogEntry = (Provenance, usize, Hypergraph);

fn generator_catalog(config: &CampaignConfig) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |family: &str, params: Vec<(&str, String)>, k: usize, h: Option<Hypergraph>| {
        if let Some(h) = h.filter(|h| h.vertex_count() <= config.n_max && h.vertex_count() >= config.n_min) {
            let params = params.into_iter().map(|(a, b)| (a.to_string(), b)).collect();
            out.push((
                Provenance {
                    family: family.into(),
                    params,
                },
                k,
                h,
            ));
        }
    };
    for &r in &config.ranks {
        for &k in &config.budgets {
            let edge = Hypergraph::new(r, [(0..r).collect::<Vec<_>>()]).ok();
            push(
                "squid",
                vec![("base", format!("single {r}-edge")), ("k", k.to_string())],
                k,
                edge.as_ref().and_then(|b| squid(b, k).ok()),
            );
            let pair = Hypergraph::new(2 * r - 1, [(0..r).collect::<Vec<_>>(), (r - 1..2 * r - 1).collect()]).ok();
            push(
                "squid",
                vec![("base", format!("two {r}-edges sharing a vertex")), ("k", k.to_string())],
                k,
                pair.as_ref().and_then(|b| squid(b, k).ok()),
            );
            if k >= 1 {
                for x in 1..r {
                    push(
                        "gsquid",
                        vec![("d", "1".into()), ("k", k.to_string()), ("r", r.to_string()), ("x", x.to_string())],
                        k,
                        generalized_squid(&GsquidSpec::new(k, r, vec![x])).ok(),
                    );
                }
                let chained = GsquidSpec::new(k, r, vec![1, 1]).chain_spines().ok();
                push(
                    "gsquid",
                    vec![("d", "2".into()), ("k", k.to_string()), ("r", r.to_string()), ("x", "1,1".into())],
                    k,
                    chained.and_then(|s| generalized_squid(&s).ok()),
                );
                if r >= 5 + 2 * k {
                    let ell = r - 5 - 2 * k;
                    push(
                        "counterexample",
                        vec![("k", k.to_string()), ("ell", ell.to_string())],
                        k,
                        counterexample(k, ell).ok(),
                    );
                }
            }
            if r >= 3 {
                push("bht", vec![("r", r.to_string())], k, bht_tight(r).ok());
            }
        }
    }
    out
}

fn run_instance(config: &CampaignConfig, inst: Instance) -> InstanceRecord {
    let started = Instant::now();
    let limits = match config.timeout_ms {
        Some(ms) => SearchLimits::until(started + Duration::from_millis(ms)),
        None => SearchLimits::unlimited(),
    };
    let k = inst.k;
    let mut record = InstanceRecord {
        index: inst.index,
        provenance: inst.provenance,
        n: 0,
        m: 0,
        r: None,
        k,
        status: Status::Ok,
        error: None,
        bounds: Vec::new(),
        lemma4: None,
        lemma5: None,
        rule_equivalence: None,
        hgr: None,
        elapsed_ms: None,
    };
    let h = match inst.h {
        Ok(h) => h,
        Err(e) => {
            record.status = Status::Error;
            record.error = Some(e);
            return record;
        }
    };
    record.n = h.vertex_count();
    record.m = h.edge_count();
    record.r = h.uniformity();

    if let Err(e) = run_checks(config, &h, k, &limits, &mut record) {
        record.status = match e {
            SolveError::TimedOut => Status::TimedOut,
            _ => Status::Error,
        };
        record.error = Some(e.to_string());
    }
    if record.flagged() || record.status == Status::TimedOut {
        record.hgr = Some(serialize_hgr(&h));
    }
    if config.record_timings {
        record.elapsed_ms = Some(started.elapsed().as_millis() as u64);
    }
    record
}

fn run_checks(
    config: &CampaignConfig,
    h: &Hypergraph,
    k: usize,
    limits: &SearchLimits,
    record: &mut InstanceRecord,
) -> Result<(), SolveError> {
    if config.checks.contains(&Check::Bounds) {
        for &rule in &config.rules {
            let report = check_bounds_with(
                h,
                k,
                &CheckOptions {
                    rule,
                    include_gamma: config.include_gamma,
                    limits: *limits,
                },
            )?;
            record.bounds.push(BoundVerdicts {
                rule,
                gamma_pk: report.gamma_pk,
                witness: report.witness.clone(),
                witness_verified: report.witness_verified,
                gamma: report.gamma,
                verdicts: report.bounds.iter().map(|b| (b.name.to_string(), b.verdict)).collect(),
            });
        }
    }
    let want4 = config.checks.contains(&Check::Lemma4);
    let want5 = config.checks.contains(&Check::Lemma5);
    if want4 || want5 {
        let (lower, upper) = verify_lemmas_within(h, k, config.lemma_hypothesis, limits)?;
        if want4 {
            record.lemma4 = Some(lower);
        }
        if want5 {
            record.lemma5 = Some(upper);
        }
    }
    if config.checks.contains(&Check::RuleEquivalence) {
        record.rule_equivalence = Some(probe_rules(h, k, limits)?);
    }
    Ok(())
}

/// Compares the two rules' verdicts on every candidate set (small orders)
/// and their optima.
pub fn probe_rules(h: &Hypergraph, k: usize, limits: &SearchLimits) -> Result<RuleProbe, SolveError> {
    let n = h.vertex_count();
    let mut gamma = BTreeMap::new();
    for rule in ForcingRule::ALL {
        let res = k_power_domination_number_within(h, k, rule, limits)?;
        gamma.insert(rule.to_string(), res.optimum);
    }
    let mut probe = RuleProbe {
        agree: gamma.values().min() == gamma.values().max(),
        exhaustive: n <= EXHAUSTIVE_PROBE_MAX_N,
        sets_checked: 0,
        gamma_pk: gamma,
        separating_set: None,
        separating_rule: None,
    };
    if probe.exhaustive {
        for mask in 1u64..(1u64 << n) {
            if mask % 1024 == 0 {
                if let Some(deadline) = limits.deadline {
                    if Instant::now() >= deadline {
                        return Err(SolveError::TimedOut);
                    }
                }
            }
            let set = VertexSet::from_iter_in(n, (0..n).filter(|v| mask >> v & 1 == 1));
            probe.sets_checked += 1;
            let wd = is_k_power_dominating(h, &set, k, ForcingRule::WhiteDegree);
            let uo = is_k_power_dominating(h, &set, k, ForcingRule::UnobservedEdges);
            if wd != uo {
                probe.agree = false;
                probe.separating_set = Some(set.to_one_based());
                probe.separating_rule = Some(if wd {
                    ForcingRule::WhiteDegree
                } else {
                    ForcingRule::UnobservedEdges
                });
                break;
            }
        }
    }
    Ok(probe)
}

fn summarize(records: &[InstanceRecord]) -> Summary {
    let mut s = Summary {
        instances: records.len(),
        ..Default::default()
    };
    let flag = |rec: &InstanceRecord, finding: String| Flagged {
        index: rec.index,
        finding,
        k: rec.k,
        provenance: rec.provenance.clone(),
        hgr: rec.hgr.clone().unwrap_or_default(),
    };
    for rec in records {
        match rec.status {
            Status::Ok => s.completed += 1,
            Status::TimedOut => s.timed_out += 1,
            Status::Error => s.errors += 1,
        }
        for b in &rec.bounds {
            for (name, verdict) in &b.verdicts {
                let key = format!("{name}@{}", b.rule);
                let label = serde_json::to_value(verdict)
                    .ok()
                    .and_then(|v| v.as_str().map(str::to_string))
                    .unwrap_or_default();
                *s.verdicts.entry(key).or_default().entry(label).or_default() += 1;
            }
            if !b.witness_verified {
                s.inconsistencies += 1;
            }
        }
        for (lemma, tally) in [(&rec.lemma4, &mut s.lemma4), (&rec.lemma5, &mut s.lemma5)] {
            if let Some(report) = lemma {
                let label = match report.outcome {
                    LemmaOutcome::Pass => "PASS",
                    LemmaOutcome::Fail => "FAIL",
                    LemmaOutcome::PreconditionFailed { .. } => "PRECONDITION_FAILED",
                };
                *tally.entry(label.to_string()).or_default() += 1;
            }
        }
        let violated = rec.violated_bounds();
        if !violated.is_empty() {
            s.violations.push(flag(rec, format!("violated: {}", violated.join(", "))));
        }
        let mut failed = Vec::new();
        if rec.lemma4.as_ref().is_some_and(LemmaReport::failed) {
            failed.push("lemma4");
        }
        if rec.lemma5.as_ref().is_some_and(LemmaReport::failed) {
            failed.push("lemma5");
        }
        if !failed.is_empty() {
            s.lemma_failures.push(flag(rec, format!("failed: {}", failed.join(", "))));
        }
        if rec.rules_separated() {
            s.rule_separations += 1;
            s.separations.push(flag(rec, "rules disagree".into()));
        }
    }
    s
}
