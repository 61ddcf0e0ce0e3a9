//! Immutable hypergraph with precomputed incidence and adjacency.

use crate::error::HypergraphError;
use crate::VertexSet;

/// A finite hypergraph on vertices `0..n`.
///
/// Edges are stored as ascending vertex lists in construction order, so an
/// edge's position is its identifier. Duplicate edges are kept and counted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    edge_sets: Vec<VertexSet>,
    incidence: Vec<Vec<usize>>,
    neighbors: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Vertices inside each edge may be
    /// given in any order; they are sorted.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self, HypergraphError>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut stored = Vec::new();
        for (id, edge) in edges.into_iter().enumerate() {
            let mut e: Vec<usize> = edge.into_iter().collect();
            if e.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: id });
            }
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateVertex { edge: id, vertex: w[0] });
            }
            stored.push(e);
        }

        let edge_sets: Vec<VertexSet> = stored
            .iter()
            .map(|e| VertexSet::from_iter_in(n, e.iter().copied()))
            .collect();
        let mut incidence = vec![Vec::new(); n];
        let mut neighbors = vec![VertexSet::empty(n); n];
        for (id, e) in stored.iter().enumerate() {
            for &v in e {
                incidence[v].push(id);
                neighbors[v].union_with(&edge_sets[id]);
            }
        }
        for (v, nb) in neighbors.iter_mut().enumerate() {
            nb.remove(v);
        }

        Ok(Self {
            n,
            edges: stored,
            edge_sets,
            incidence,
            neighbors,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &[usize] {
        &self.edges[id]
    }

    pub fn edge_set(&self, id: usize) -> &VertexSet {
        &self.edge_sets[id]
    }

    /// Identifiers of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, items: I) -> Result<VertexSet, HypergraphError> {
        let mut set = self.empty_set();
        for v in items {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// The common edge size, if every edge has the same size. A hypergraph
    /// without edges has no rank.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == r).then_some(r)
    }

    /// Open neighborhood: vertices sharing an edge with `v`, excluding `v`.
    pub fn neighbors(&self, v: usize) -> Result<&VertexSet, HypergraphError> {
        self.check_vertex(v)?;
        Ok(&self.neighbors[v])
    }

    pub(crate) fn nbhd(&self, v: usize) -> &VertexSet {
        &self.neighbors[v]
    }

    pub fn closed_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.neighbors[v]);
        }
        out
    }

    pub fn closed_neighborhood_of(&self, v: usize) -> VertexSet {
        let mut out = self.neighbors[v].clone();
        out.insert(v);
        out
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.incidence.iter().any(Vec::is_empty)
    }

    /// Connectivity of the "shares an edge" relation. The empty hypergraph
    /// counts as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.reach(0, &self.all_vertices()).is_full()
    }

    /// Vertices of `within` reachable from `start` through adjacencies
    /// whose endpoints both lie in `within`.
    fn reach(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = self.empty_set();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for u in &self.neighbors[v] {
                if within.contains(u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Components of the adjacency relation restricted to `set`: two members
    /// are joined when some edge of the whole hypergraph contains both.
    pub fn induced_component_count(&self, set: &VertexSet) -> Result<usize, HypergraphError> {
        if set.is_empty() {
            return Err(HypergraphError::EmptySet);
        }
        if let Some(v) = set.iter().find(|&v| v >= self.n) {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut remaining = set.clone();
        let mut count = 0;
        while let Some(v) = remaining.first() {
            let comp = self.reach(v, set);
            remaining.difference_with(&comp);
            count += 1;
        }
        Ok(count)
    }
}
