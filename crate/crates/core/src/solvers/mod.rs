//! Exact optimum search for γ and γ_p^k.

mod lemmas;

use std::time::Instant;

use serde::Serialize;

use crate::error::SolveError;
use crate::propagation::{is_k_power_dominating, observe_from, ForcingRule};
use crate::{Hypergraph, VertexSet};

pub use lemmas::{
    verify_lemma_4, verify_lemma_5, verify_lemmas, verify_lemmas_within, LemmaEntry, LemmaId, LemmaOutcome,
    LemmaReport, SizeHypothesis,
};

/// Wall-clock budget for a search. The default is unlimited.
#[derive(Clone, Copy, Debug, Default)]
pub struct SearchLimits {
    pub deadline: Option<Instant>,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn until(deadline: Instant) -> Self {
        Self {
            deadline: Some(deadline),
        }
    }
}

/// Optimum value with its witness set(s).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub optimum: usize,
    #[serde(serialize_with = "serialize_witnesses")]
    pub witnesses: Vec<VertexSet>,
    pub nodes_explored: u64,
    /// `None` for the domination number.
    pub rule: Option<ForcingRule>,
    pub k: Option<usize>,
}

impl SolveResult {
    pub fn witness(&self) -> &VertexSet {
        &self.witnesses[0]
    }
}

fn serialize_witnesses<S: serde::Serializer>(ws: &[VertexSet], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(ws.iter().map(VertexSet::to_one_based))
}

struct Clock {
    limits: SearchLimits,
    nodes: u64,
}

impl Clock {
    fn new(limits: &SearchLimits) -> Self {
        Self {
            limits: *limits,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(512) {
            if let Some(deadline) = self.limits.deadline {
                if Instant::now() >= deadline {
                    return Err(SolveError::TimedOut);
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Domination number
// ---------------------------------------------------------------------------

pub fn domination_number(h: &Hypergraph) -> Result<SolveResult, SolveError> {
    domination_number_within(h, &SearchLimits::unlimited())
}

/// Branch and bound: pick the undominated vertex with the smallest closed
/// neighborhood and branch on which of its closed neighbors dominates it.
pub fn domination_number_within(h: &Hypergraph, limits: &SearchLimits) -> Result<SolveResult, SolveError> {
    let n = h.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyHypergraph);
    }
    let closed: Vec<VertexSet> = (0..n).map(|v| h.closed_neighborhood_of(v)).collect();
    let largest = closed.iter().map(VertexSet::len).max().unwrap_or(1);

    let mut search = DomSearch {
        closed: &closed,
        largest,
        best: greedy_dominating_set(h, &closed),
        chosen: Vec::new(),
        clock: Clock::new(limits),
    };
    search.descend(h.empty_set())?;

    let witness = h.vertex_set(search.best.iter().copied())?;
    Ok(SolveResult {
        optimum: witness.len(),
        witnesses: vec![witness],
        nodes_explored: search.clock.nodes,
        rule: None,
        k: None,
    })
}

fn greedy_dominating_set(h: &Hypergraph, closed: &[VertexSet]) -> Vec<usize> {
    let mut dominated = h.empty_set();
    let mut chosen = Vec::new();
    while !dominated.is_full() {
        let best = (0..closed.len())
            .max_by_key(|&v| (closed[v].difference_len(&dominated), std::cmp::Reverse(v)))
            .expect("n > 0");
        chosen.push(best);
        dominated.union_with(&closed[best]);
    }
    chosen
}

struct DomSearch<'a> {
    closed: &'a [VertexSet],
    largest: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
    clock: Clock,
}

impl DomSearch<'_> {
    fn descend(&mut self, dominated: VertexSet) -> Result<(), SolveError> {
        self.clock.tick()?;
        let missing = dominated.capacity() - dominated.len();
        if missing == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + missing.div_ceil(self.largest) >= self.best.len() {
            return Ok(());
        }
        let target = (0..self.closed.len())
            .filter(|&v| !dominated.contains(v))
            .min_by_key(|&v| self.closed[v].len())
            .expect("something undominated");
        let mut options: Vec<usize> = self.closed[target].to_vec();
        options.sort_by_key(|&u| (std::cmp::Reverse(self.closed[u].difference_len(&dominated)), u));
        for u in options {
            self.chosen.push(u);
            self.descend(dominated.union(&self.closed[u]))?;
            self.chosen.pop();
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// k-power domination number
// ---------------------------------------------------------------------------

pub fn k_power_domination_number(h: &Hypergraph, k: usize, rule: ForcingRule) -> Result<SolveResult, SolveError> {
    k_power_domination_number_within(h, k, rule, &SearchLimits::unlimited())
}

/// Tries candidate sets by increasing size, lexicographically within a
/// size, and stops at the first size with a feasible set.
pub fn k_power_domination_number_within(
    h: &Hypergraph,
    k: usize,
    rule: ForcingRule,
    limits: &SearchLimits,
) -> Result<SolveResult, SolveError> {
    let mut search = KpdSearch::new(h, k, rule, limits)?;
    for size in 1..=h.vertex_count() {
        if let Some(w) = search.scan(size, false)?.into_iter().next() {
            return Ok(search.finish(size, vec![w]));
        }
    }
    unreachable!("the whole vertex set always observes everything")
}

pub fn all_minimum_kpds(h: &Hypergraph, k: usize, rule: ForcingRule) -> Result<SolveResult, SolveError> {
    all_minimum_kpds_within(h, k, rule, &SearchLimits::unlimited())
}

/// Every minimum k-power dominating set, in lexicographic order.
pub fn all_minimum_kpds_within(
    h: &Hypergraph,
    k: usize,
    rule: ForcingRule,
    limits: &SearchLimits,
) -> Result<SolveResult, SolveError> {
    let mut search = KpdSearch::new(h, k, rule, limits)?;
    for size in 1..=h.vertex_count() {
        let found = search.scan(size, true)?;
        if !found.is_empty() {
            return Ok(search.finish(size, found));
        }
    }
    unreachable!("the whole vertex set always observes everything")
}

/// Lexicographic k-subset search with prefix pruning.
///
/// A prefix is discarded once one of its members has a closed neighborhood
/// inside the closed neighborhood of the others: dropping that member leaves
/// `N[D]`, and so the closure, unchanged, and the smaller set was already
/// rejected at an earlier size.
struct KpdSearch<'a> {
    h: &'a Hypergraph,
    k: usize,
    rule: ForcingRule,
    closed: Vec<VertexSet>,
    clock: Clock,
}

impl<'a> KpdSearch<'a> {
    fn new(h: &'a Hypergraph, k: usize, rule: ForcingRule, limits: &SearchLimits) -> Result<Self, SolveError> {
        if h.vertex_count() == 0 {
            return Err(SolveError::EmptyHypergraph);
        }
        Ok(Self {
            h,
            k,
            rule,
            closed: (0..h.vertex_count()).map(|v| h.closed_neighborhood_of(v)).collect(),
            clock: Clock::new(limits),
        })
    }

    fn finish(self, size: usize, witnesses: Vec<VertexSet>) -> SolveResult {
        SolveResult {
            optimum: size,
            witnesses,
            nodes_explored: self.clock.nodes,
            rule: Some(self.rule),
            k: Some(self.k),
        }
    }

    fn scan(&mut self, size: usize, collect_all: bool) -> Result<Vec<VertexSet>, SolveError> {
        let mut found = Vec::new();
        let mut prefix = Vec::with_capacity(size);
        self.extend(&mut prefix, 0, size, collect_all, &mut found)?;
        Ok(found)
    }

    fn extend(
        &mut self,
        prefix: &mut Vec<usize>,
        start: usize,
        size: usize,
        collect_all: bool,
        found: &mut Vec<VertexSet>,
    ) -> Result<bool, SolveError> {
        let n = self.h.vertex_count();
        if prefix.len() == size {
            self.clock.tick()?;
            let observed = self.union_of(prefix, None);
            if observe_from(self.h, observed, self.k, self.rule) {
                found.push(VertexSet::from_iter_in(n, prefix.iter().copied()));
                return Ok(!collect_all);
            }
            return Ok(false);
        }
        let needed = size - prefix.len();
        for u in start..=n - needed {
            prefix.push(u);
            if !self.has_redundant_member(prefix) && self.extend(prefix, u + 1, size, collect_all, found)? {
                return Ok(true);
            }
            prefix.pop();
        }
        Ok(false)
    }

    fn union_of(&self, members: &[usize], skip: Option<usize>) -> VertexSet {
        let mut out = self.h.empty_set();
        for (i, &v) in members.iter().enumerate() {
            if Some(i) != skip {
                out.union_with(&self.closed[v]);
            }
        }
        out
    }

    fn has_redundant_member(&self, members: &[usize]) -> bool {
        members.len() > 1
            && (0..members.len()).any(|i| self.closed[members[i]].is_subset(&self.union_of(members, Some(i))))
    }
}

// ---------------------------------------------------------------------------
// Private neighbors and component-minimal optima
// ---------------------------------------------------------------------------

/// External private neighbors of `v` with respect to `set`: vertices outside
/// `set` adjacent to `v` and to no other member.
pub fn epn(h: &Hypergraph, v: usize, set: &VertexSet) -> Result<VertexSet, SolveError> {
    h.check_vertex(v)?;
    if !set.contains(v) {
        return Err(SolveError::NotAMember { vertex: v });
    }
    let mut out = h.nbhd(v).difference(set);
    for w in set.iter().filter(|&w| w != v) {
        out.difference_with(h.nbhd(w));
    }
    Ok(out)
}

/// Among all minimum k-power dominating sets under the white-degree rule,
/// one whose members induce the fewest components; ties go to the
/// lexicographically smallest set.
pub fn fewest_components_minimum_kpds(h: &Hypergraph, k: usize) -> Result<VertexSet, SolveError> {
    fewest_components_minimum_kpds_within(h, k, ForcingRule::WhiteDegree, &SearchLimits::unlimited())
}

pub fn fewest_components_minimum_kpds_within(
    h: &Hypergraph,
    k: usize,
    rule: ForcingRule,
    limits: &SearchLimits,
) -> Result<VertexSet, SolveError> {
    let all = all_minimum_kpds_within(h, k, rule, limits)?;
    least_components(h, &all.witnesses)
}

/// First set (in the given order) with the fewest induced components.
pub(crate) fn least_components(h: &Hypergraph, sets: &[VertexSet]) -> Result<VertexSet, SolveError> {
    let mut best: Option<(usize, &VertexSet)> = None;
    for w in sets {
        let comps = h.induced_component_count(w)?;
        if best.is_none_or(|(c, _)| comps < c) {
            best = Some((comps, w));
        }
    }
    Ok(best.expect("at least one witness").1.clone())
}

/// Re-checks a witness independently of the search that produced it.
pub fn verify_witness(h: &Hypergraph, witness: &VertexSet, k: usize, rule: ForcingRule) -> bool {
    is_k_power_dominating(h, witness, k, rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path() -> Hypergraph {
        Hypergraph::new(5, [vec![0, 1, 2], vec![2, 3, 4]]).unwrap()
    }

    fn set(h: &Hypergraph, xs: &[usize]) -> VertexSet {
        h.vertex_set(xs.iter().copied()).unwrap()
    }

    #[test]
    fn domination_examples() {
        let edge = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(domination_number(&edge).unwrap().optimum, 1);
        let p = path();
        let res = domination_number(&p).unwrap();
        assert_eq!(res.optimum, 1);
        assert_eq!(res.witness().to_vec(), vec![2]);
        let isolated = Hypergraph::new(4, [vec![0, 1]]).unwrap();
        assert_eq!(domination_number(&isolated).unwrap().optimum, 3);
        assert_eq!(
            domination_number(&Hypergraph::new(0, Vec::<Vec<usize>>::new()).unwrap()),
            Err(SolveError::EmptyHypergraph)
        );
    }

    #[test]
    fn all_minimum_on_path() {
        // Every single vertex of the two-edge path dominates one edge and
        // leaves at most the other edge's remainder for one forcing step.
        let p = path();
        let res = all_minimum_kpds(&p, 1, ForcingRule::WhiteDegree).unwrap();
        assert_eq!(res.optimum, 1);
        let singles: Vec<Vec<usize>> = res.witnesses.iter().map(VertexSet::to_vec).collect();
        assert_eq!(singles, vec![vec![0], vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn epn_examples() {
        let p = path();
        assert_eq!(epn(&p, 0, &set(&p, &[0, 4])).unwrap().to_vec(), vec![1]);
        assert_eq!(epn(&p, 0, &set(&p, &[0])).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(epn(&p, 2, &set(&p, &[0, 2])).unwrap().to_vec(), vec![3, 4]);
        assert_eq!(epn(&p, 1, &set(&p, &[0])), Err(SolveError::NotAMember { vertex: 1 }));
    }

    #[test]
    fn timeout_is_reported() {
        let big = Hypergraph::new(24, (0..22).map(|i| vec![i, i + 1, i + 2])).unwrap();
        let past = SearchLimits::until(Instant::now());
        assert_eq!(
            all_minimum_kpds_within(&big, 0, ForcingRule::WhiteDegree, &past),
            Err(SolveError::TimedOut)
        );
    }

    #[test]
    fn witnesses_reverify() {
        let p = path();
        for k in 0..3 {
            for rule in ForcingRule::ALL {
                let res = all_minimum_kpds(&p, k, rule).unwrap();
                for w in &res.witnesses {
                    assert_eq!(w.len(), res.optimum);
                    assert!(verify_witness(&p, w, k, rule));
                }
            }
        }
    }
}
