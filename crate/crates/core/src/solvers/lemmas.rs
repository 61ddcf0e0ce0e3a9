//! Machine checks of the two structural inequalities satisfied by a
//! component-minimal minimum k-power dominating set `D`:
//!
//! * lower: `k + 1 <= deg_w(v, N[D - v])` for every `v` in `D`;
//! * upper: `deg_w(v, N[D - v]) <= |epn(v, D)|` for every `v` in `D`.
//!
//! A violated inequality is a finding and is returned as
//! [`LemmaOutcome::Fail`], never raised as a panic.

use serde::{Deserialize, Serialize};

use super::{all_minimum_kpds_within, epn, least_components, SearchLimits};
use crate::error::SolveError;
use crate::propagation::{white_degree, ColorState, ForcingRule};
use crate::{Hypergraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaId {
    /// `k + 1 <= deg_w(v, N[D - v])`
    #[serde(rename = "lemma4")]
    WhiteDegreeLower,
    /// `deg_w(v, N[D - v]) <= |epn(v, D)|`
    #[serde(rename = "lemma5")]
    PrivateNeighborUpper,
}

/// The minimum order demanded before the lower inequality is claimed.
/// Both readings are offered: `n >= k + 3` and `n >= k + r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum SizeHypothesis {
    #[default]
    #[serde(rename = "k+3")]
    KPlusThree,
    #[serde(rename = "k+r")]
    KPlusRank,
}

impl std::str::FromStr for SizeHypothesis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k+3" => Ok(SizeHypothesis::KPlusThree),
            "k+r" => Ok(SizeHypothesis::KPlusRank),
            other => Err(format!("unknown size hypothesis {other:?} (expected k+3 or k+r)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaEntry {
    /// 1-based, like every other externally reported vertex.
    pub vertex: usize,
    pub white_degree: usize,
    pub epn_size: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LemmaOutcome {
    Pass,
    Fail,
    PreconditionFailed { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: LemmaId,
    pub n: usize,
    pub m: usize,
    pub r: Option<usize>,
    pub k: usize,
    pub hypothesis: SizeHypothesis,
    /// 1-based members of the examined set; empty when preconditions failed.
    pub chosen: Vec<usize>,
    pub entries: Vec<LemmaEntry>,
    pub outcome: LemmaOutcome,
    /// When the lower inequality fails for the examined set: the first
    /// minimum set (lexicographically) for which it holds at every member,
    /// or `None` if no minimum set satisfies it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub satisfying_alternative: Option<Option<Vec<usize>>>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.outcome == LemmaOutcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == LemmaOutcome::Fail
    }
}

pub fn verify_lemma_4(h: &Hypergraph, k: usize, hypothesis: SizeHypothesis) -> Result<LemmaReport, SolveError> {
    Ok(verify_lemmas(h, k, hypothesis)?.0)
}

pub fn verify_lemma_5(h: &Hypergraph, k: usize, hypothesis: SizeHypothesis) -> Result<LemmaReport, SolveError> {
    Ok(verify_lemmas(h, k, hypothesis)?.1)
}

/// Both checks against the same component-minimal minimum set.
pub fn verify_lemmas(
    h: &Hypergraph,
    k: usize,
    hypothesis: SizeHypothesis,
) -> Result<(LemmaReport, LemmaReport), SolveError> {
    verify_lemmas_within(h, k, hypothesis, &SearchLimits::unlimited())
}

pub fn verify_lemmas_within(
    h: &Hypergraph,
    k: usize,
    hypothesis: SizeHypothesis,
    limits: &SearchLimits,
) -> Result<(LemmaReport, LemmaReport), SolveError> {
    let blank = |lemma| LemmaReport {
        lemma,
        n: h.vertex_count(),
        m: h.edge_count(),
        r: h.uniformity(),
        k,
        hypothesis,
        chosen: Vec::new(),
        entries: Vec::new(),
        outcome: LemmaOutcome::Pass,
        satisfying_alternative: None,
    };
    let mut lower = blank(LemmaId::WhiteDegreeLower);
    let mut upper = blank(LemmaId::PrivateNeighborUpper);

    if let Some(reason) = precondition_failure(h, k, hypothesis) {
        lower.outcome = LemmaOutcome::PreconditionFailed { reason: reason.clone() };
        upper.outcome = LemmaOutcome::PreconditionFailed { reason };
        return Ok((lower, upper));
    }

    let minimum = all_minimum_kpds_within(h, k, ForcingRule::WhiteDegree, limits)?;
    let chosen = least_components(h, &minimum.witnesses)?;
    for v in &chosen {
        let wd = residual_white_degree(h, &chosen, v)?;
        let private = epn(h, v, &chosen)?.len();
        lower.entries.push(LemmaEntry {
            vertex: v + 1,
            white_degree: wd,
            epn_size: private,
            holds: k < wd,
        });
        upper.entries.push(LemmaEntry {
            vertex: v + 1,
            white_degree: wd,
            epn_size: private,
            holds: wd <= private,
        });
    }
    for report in [&mut lower, &mut upper] {
        report.chosen = chosen.to_one_based();
        if report.entries.iter().any(|e| !e.holds) {
            report.outcome = LemmaOutcome::Fail;
        }
    }
    if lower.failed() {
        let mut alternative = None;
        for d in &minimum.witnesses {
            if lower_holds_everywhere(h, d, k)? {
                alternative = Some(d.to_one_based());
                break;
            }
        }
        lower.satisfying_alternative = Some(alternative);
    }
    Ok((lower, upper))
}

/// `deg_w(v, N[D - v])`.
fn residual_white_degree(h: &Hypergraph, set: &VertexSet, v: usize) -> Result<usize, SolveError> {
    let mut others = set.clone();
    others.remove(v);
    let blue = ColorState::new(h.closed_neighborhood(&others));
    Ok(white_degree(h, &blue, v)?)
}

fn lower_holds_everywhere(h: &Hypergraph, set: &VertexSet, k: usize) -> Result<bool, SolveError> {
    for v in set {
        if residual_white_degree(h, set, v)? <= k {
            return Ok(false);
        }
    }
    Ok(true)
}

fn precondition_failure(h: &Hypergraph, k: usize, hypothesis: SizeHypothesis) -> Option<String> {
    let n = h.vertex_count();
    if n == 0 {
        return Some("hypergraph has no vertices".into());
    }
    if !h.is_connected() {
        return Some("hypergraph is not connected".into());
    }
    match hypothesis {
        SizeHypothesis::KPlusThree if n < k + 3 => Some(format!("n = {n} < k + 3 = {}", k + 3)),
        SizeHypothesis::KPlusRank => match h.uniformity() {
            None => Some("hypothesis n >= k + r needs a uniform hypergraph".into()),
            Some(r) if n < k + r => Some(format!("n = {n} < k + r = {}", k + r)),
            Some(_) => None,
        },
        _ => None,
    }
}
