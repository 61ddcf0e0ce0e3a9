//! Upper bounds on γ and γ_p^k, evaluated exactly.
//!
//! The bound formulas are generic over any integer type; floors are taken
//! on the integers before the fraction is formed. Verdicts compare an
//! integer optimum against a [`Ratio`] and never touch floating point.

use std::fmt::Display;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;
use serde::Serialize;

use crate::error::{BoundError, SolveError};
use crate::propagation::ForcingRule;
use crate::solvers::{domination_number_within, k_power_domination_number_within, verify_witness, SearchLimits};
use crate::{Hypergraph, Rational};

fn lit<T: FromPrimitive>(v: u8) -> T {
    T::from_u8(v).expect("small literal fits every integer type")
}

/// `n / (r + k)`.
pub fn conjecture_bound<T>(n: T, r: T, k: T) -> Result<Ratio<T>, BoundError>
where
    T: Integer + Clone,
{
    let den = r + k;
    if den <= T::zero() {
        return Err(BoundError::NonPositiveDenominator);
    }
    Ok(Ratio::new(n, den))
}

/// `(n + floor((r-3)/2) m) / (floor(3(r-1)/2) + k)`, for `r >= 3`.
pub fn winner_bound<T>(n: T, m: T, r: T, k: T) -> Result<Ratio<T>, BoundError>
where
    T: Integer + Clone + FromPrimitive + Display,
{
    let (edge_weight, base) = floor_terms(&r)?;
    Ok(Ratio::new(n + edge_weight * m, base + k))
}

/// `(n + floor((r-3)/2) m) / floor(3(r-1)/2)`, for `r >= 3`.
pub fn bht_bound<T>(n: T, m: T, r: T) -> Result<Ratio<T>, BoundError>
where
    T: Integer + Clone + FromPrimitive + Display,
{
    let (edge_weight, base) = floor_terms(&r)?;
    Ok(Ratio::new(n + edge_weight * m, base))
}

/// `(floor((r-3)/2), floor(3(r-1)/2))`.
fn floor_terms<T>(r: &T) -> Result<(T, T), BoundError>
where
    T: Integer + Clone + FromPrimitive + Display,
{
    let three: T = lit(3);
    let two: T = lit(2);
    if *r < three {
        return Err(BoundError::RankBelowThree(r.to_string()));
    }
    let edge_weight = (r.clone() - three.clone()).div_floor(&two);
    let base = (three * (r.clone() - T::one())).div_floor(&two);
    Ok((edge_weight, base))
}

/// `ceil(n / (r + k))`.
pub fn ceiling_bound<T>(n: T, r: T, k: T) -> Result<T, BoundError>
where
    T: Integer + Clone,
{
    Ok(conjecture_bound(n, r, k)?.ceil().to_integer())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    HoldsStrict,
    HoldsEquality,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn compare(value: usize, bound: &Rational) -> Verdict {
        let value = Rational::from_integer(value as i64);
        match value.cmp(bound) {
            std::cmp::Ordering::Less => Verdict::HoldsStrict,
            std::cmp::Ordering::Equal => Verdict::HoldsEquality,
            std::cmp::Ordering::Greater => Verdict::Violated,
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Verdict::HoldsStrict | Verdict::HoldsEquality)
    }
}

/// Which quantity a bound constrains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    GammaPk,
    Gamma,
}

/// Standing of a statement: proven results, the open conjecture, or the
/// informational ceiling remark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Standing {
    Theorem,
    Conjecture,
    Remark,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub standing: Standing,
    pub target: Target,
    /// Exact value as `p/q` (or `p`); absent when the formula is undefined.
    #[serde(serialize_with = "serialize_ratio")]
    pub value: Option<Rational>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn serialize_ratio<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.serialize_str(&q.to_string()),
        None => s.serialize_none(),
    }
}

pub const BOUND_REPORT_SCHEMA: &str = "hyperpd.bounds/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub schema: &'static str,
    pub n: usize,
    pub m: usize,
    pub r: Option<usize>,
    pub k: usize,
    pub rule: ForcingRule,
    pub connected: bool,
    pub gamma_pk: usize,
    /// 1-based.
    pub witness: Vec<usize>,
    /// Independent re-check of `witness`; `false` is an internal error.
    pub witness_verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<usize>,
    /// `r = 2` instances whose parameters match the complete bipartite
    /// graph `K_{k+2,k+2}`. A parameter check only, not a recognizer.
    pub complete_bipartite_candidate: bool,
    pub bounds: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn bound(&self, name: &str) -> Option<&BoundCheck> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn verdict(&self, name: &str) -> Option<Verdict> {
        self.bound(name).map(|b| b.verdict)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bounds.iter().filter(|b| b.verdict == Verdict::Violated)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    pub rule: ForcingRule,
    pub include_gamma: bool,
    pub limits: SearchLimits,
}

pub fn check_bounds(h: &Hypergraph, k: usize) -> Result<BoundReport, SolveError> {
    check_bounds_with(h, k, &CheckOptions::default())
}

pub fn check_bounds_with(h: &Hypergraph, k: usize, opts: &CheckOptions) -> Result<BoundReport, SolveError> {
    let solved = k_power_domination_number_within(h, k, opts.rule, &opts.limits)?;
    let gamma = if opts.include_gamma {
        Some(domination_number_within(h, &opts.limits)?.optimum)
    } else {
        None
    };
    let gamma_pk = solved.optimum;
    let witness_verified = verify_witness(h, solved.witness(), k, opts.rule);

    let n = h.vertex_count();
    let m = h.edge_count();
    let r = h.uniformity();
    let connected = h.is_connected();

    let mut bounds = Vec::new();
    let conjecture_gate = conjecture_hypotheses(connected, r, n, k);

    let pk = |name, standing, value: Result<Option<Rational>, String>| BoundCheck::judge(name, standing, Target::GammaPk, gamma_pk, value);

    bounds.push(pk(
        "conjecture",
        Standing::Conjecture,
        conjecture_gate
            .clone()
            .map(|r| Some(conjecture_bound(n as i64, r as i64, k as i64).expect("r >= 1"))),
    ));
    bounds.push(pk(
        "ceiling_remark",
        Standing::Remark,
        conjecture_gate.clone().map(|r| {
            Some(Rational::from_integer(
                ceiling_bound(n as i64, r as i64, k as i64).expect("r >= 1"),
            ))
        }),
    ));
    bounds.push(pk(
        "theorem8",
        Standing::Theorem,
        conjecture_gate.clone().and_then(|r| {
            winner_bound(n as i64, m as i64, r as i64, k as i64)
                .map(Some)
                .map_err(|_| format!("needs r >= 3, got r = {r}"))
        }),
    ));
    bounds.push(pk(
        "corollary9",
        Standing::Theorem,
        conjecture_gate.and_then(|r| {
            if r == 3 || r == 4 {
                Ok(Some(conjecture_bound(n as i64, r as i64, k as i64).expect("r >= 1")))
            } else {
                Err(format!("needs r in {{3, 4}}, got r = {r}"))
            }
        }),
    ));

    if let Some(gamma) = gamma {
        let gate = domination_hypotheses(h, r);
        bounds.push(BoundCheck::judge(
            "theorem6",
            Standing::Theorem,
            Target::Gamma,
            gamma,
            gate.clone().and_then(|r| {
                bht_bound(n as i64, m as i64, r as i64)
                    .map(Some)
                    .map_err(|_| format!("needs r >= 3, got r = {r}"))
            }),
        ));
        bounds.push(BoundCheck::judge(
            "corollary7",
            Standing::Theorem,
            Target::Gamma,
            gamma,
            gate.and_then(|r| {
                if r == 3 || r == 4 {
                    Ok(Some(Rational::new(n as i64, r as i64)))
                } else {
                    Err(format!("needs r in {{3, 4}}, got r = {r}"))
                }
            }),
        ));
    }

    let complete_bipartite_candidate =
        r == Some(2) && n == 2 * (k + 2) && (0..n).all(|v| h.degree(v) == k + 2) && connected;

    Ok(BoundReport {
        schema: BOUND_REPORT_SCHEMA,
        n,
        m,
        r,
        k,
        rule: opts.rule,
        connected,
        gamma_pk,
        witness: solved.witness().to_one_based(),
        witness_verified,
        gamma,
        complete_bipartite_candidate,
        bounds,
    })
}

/// Rank if the conjecture's hypotheses hold, otherwise why not.
fn conjecture_hypotheses(connected: bool, r: Option<usize>, n: usize, k: usize) -> Result<usize, String> {
    let r = r.ok_or_else(|| "hypergraph is not uniform".to_string())?;
    if !connected {
        return Err("hypergraph is not connected".into());
    }
    if k + r > n {
        return Err(format!("k + r = {} exceeds n = {n}", k + r));
    }
    Ok(r)
}

fn domination_hypotheses(h: &Hypergraph, r: Option<usize>) -> Result<usize, String> {
    let r = r.ok_or_else(|| "hypergraph is not uniform".to_string())?;
    if h.has_isolated_vertex() {
        return Err("hypergraph has an isolated vertex".into());
    }
    Ok(r)
}

impl BoundCheck {
    fn judge(
        name: &'static str,
        standing: Standing,
        target: Target,
        observed: usize,
        value: Result<Option<Rational>, String>,
    ) -> BoundCheck {
        match value {
            Ok(Some(v)) => BoundCheck {
                name,
                standing,
                target,
                verdict: Verdict::compare(observed, &v),
                value: Some(v),
                reason: None,
            },
            Ok(None) => unreachable!("every applicable bound has a value"),
            Err(reason) => BoundCheck {
                name,
                standing,
                target,
                value: None,
                verdict: Verdict::NotApplicable,
                reason: Some(reason),
            },
        }
    }
}
