//! Color-change propagation.
//!
//! A [`ColorState`] holds the blue vertices; everything else is white. A blue
//! vertex may force (turn all of its neighbors blue) when its budget test
//! passes under the chosen [`ForcingRule`]:
//!
//! * [`ForcingRule::WhiteDegree`]: its white neighbors fit inside at most `k`
//!   of its incident edges;
//! * [`ForcingRule::UnobservedEdges`]: at most `k` of its incident edges still
//!   contain a white vertex.
//!
//! Both tests only get easier as the blue set grows, so repeated forcing
//! reaches a unique fixpoint regardless of firing order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cover::min_cover_size;
use crate::error::HypergraphError;
use crate::{Hypergraph, VertexSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ForcingRule {
    #[default]
    #[serde(rename = "white-degree")]
    WhiteDegree,
    #[serde(rename = "unobserved")]
    UnobservedEdges,
}

impl ForcingRule {
    pub const ALL: [ForcingRule; 2] = [ForcingRule::WhiteDegree, ForcingRule::UnobservedEdges];

    pub fn as_str(self) -> &'static str {
        match self {
            ForcingRule::WhiteDegree => "white-degree",
            ForcingRule::UnobservedEdges => "unobserved",
        }
    }
}

impl fmt::Display for ForcingRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ForcingRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "white-degree" => Ok(ForcingRule::WhiteDegree),
            "unobserved" => Ok(ForcingRule::UnobservedEdges),
            other => Err(format!("unknown rule {other:?} (expected white-degree or unobserved)")),
        }
    }
}

/// The blue vertices of a propagation; all others are white.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorState {
    blue: VertexSet,
}

impl ColorState {
    pub fn new(blue: VertexSet) -> Self {
        Self { blue }
    }

    pub fn all_white(h: &Hypergraph) -> Self {
        Self::new(h.empty_set())
    }

    pub fn blue(&self) -> &VertexSet {
        &self.blue
    }

    pub fn into_blue(self) -> VertexSet {
        self.blue
    }

    pub fn is_blue(&self, v: usize) -> bool {
        self.blue.contains(v)
    }

    pub fn is_complete(&self) -> bool {
        self.blue.is_full()
    }

    /// Colors every neighbor of `v` blue.
    pub fn force(&mut self, h: &Hypergraph, v: usize) {
        self.blue.union_with(h.nbhd(v));
    }
}

pub fn white_neighbors(h: &Hypergraph, st: &ColorState, v: usize) -> Result<VertexSet, HypergraphError> {
    Ok(h.neighbors(v)?.difference(&st.blue))
}

/// Fewest edges through `v` whose union holds every white neighbor of `v`.
pub fn white_degree(h: &Hypergraph, st: &ColorState, v: usize) -> Result<usize, HypergraphError> {
    h.check_vertex(v)?;
    Ok(white_degree_unchecked(h, &st.blue, v))
}

fn white_degree_unchecked(h: &Hypergraph, blue: &VertexSet, v: usize) -> usize {
    let white = h.nbhd(v).difference(blue);
    if white.is_empty() {
        return 0;
    }
    let sets: Vec<&VertexSet> = h.incident_edges(v).iter().map(|&e| h.edge_set(e)).collect();
    min_cover_size(&white, &sets).expect("incident edges cover the neighborhood")
}

/// Largest white degree over the blue vertices; 0 when nothing is blue.
pub fn max_white_degree(h: &Hypergraph, st: &ColorState) -> usize {
    st.blue
        .iter()
        .map(|v| white_degree_unchecked(h, &st.blue, v))
        .max()
        .unwrap_or(0)
}

/// Number of edges through `v` that still contain a white vertex.
pub fn unobserved_incident_count(h: &Hypergraph, st: &ColorState, v: usize) -> Result<usize, HypergraphError> {
    h.check_vertex(v)?;
    Ok(unobserved_unchecked(h, &st.blue, v))
}

fn unobserved_unchecked(h: &Hypergraph, blue: &VertexSet, v: usize) -> usize {
    h.incident_edges(v)
        .iter()
        .filter(|&&e| !h.edge_set(e).is_subset(blue))
        .count()
}

fn eligible(h: &Hypergraph, blue: &VertexSet, v: usize, k: usize, rule: ForcingRule) -> bool {
    let unobserved = unobserved_unchecked(h, blue, v);
    match rule {
        ForcingRule::UnobservedEdges => unobserved <= k,
        // The unobserved edges already cover every white neighbor, so they
        // bound the white degree from above.
        ForcingRule::WhiteDegree => unobserved <= k || white_degree_unchecked(h, blue, v) <= k,
    }
}

/// Whether the blue vertex `v` passes the rule's budget test. White vertices
/// never force.
pub fn can_force(h: &Hypergraph, st: &ColorState, v: usize, k: usize, rule: ForcingRule) -> Result<bool, HypergraphError> {
    h.check_vertex(v)?;
    Ok(st.is_blue(v) && eligible(h, &st.blue, v, k, rule))
}

/// Fixpoint of repeated forcing from `st`.
pub fn closure(h: &Hypergraph, st: &ColorState, k: usize, rule: ForcingRule) -> ColorState {
    let mut blue = st.blue.clone();
    // A vertex whose neighbors are all blue can never change anything again.
    let mut settled = h.empty_set();
    loop {
        let mut fired = false;
        for v in 0..h.vertex_count() {
            if !blue.contains(v) || settled.contains(v) {
                continue;
            }
            if h.nbhd(v).is_subset(&blue) {
                settled.insert(v);
                continue;
            }
            if eligible(h, &blue, v, k, rule) {
                blue.union_with(h.nbhd(v));
                settled.insert(v);
                fired = true;
            }
        }
        if !fired {
            return ColorState::new(blue);
        }
    }
}

pub fn is_k_forcing_set(h: &Hypergraph, set: &VertexSet, k: usize, rule: ForcingRule) -> bool {
    closure(h, &ColorState::new(set.clone()), k, rule).is_complete()
}

/// Whether starting from `N[D]` the closure colors every vertex.
pub fn is_k_power_dominating(h: &Hypergraph, set: &VertexSet, k: usize, rule: ForcingRule) -> bool {
    observe_from(h, h.closed_neighborhood(set), k, rule)
}

pub(crate) fn observe_from(h: &Hypergraph, start: VertexSet, k: usize, rule: ForcingRule) -> bool {
    if start.is_full() {
        return true;
    }
    closure(h, &ColorState::new(start), k, rule).is_complete()
}
