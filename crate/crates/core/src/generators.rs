//! Deterministic constructions plus a seeded random connected generator.
//!
//! Vertex numbering is fixed for each family so that serialized output is
//! reproducible byte for byte:
//!
//! * [`squid`]: base vertices `0..n`, then for each base vertex `v` in order
//!   its `r - 2` shared appendage vertices followed by its `k + 1` private
//!   ones. Base edges come first, then `k + 1` appendage edges per vertex.
//! * [`generalized_squid`]: all strong vertices spine by spine, then all weak
//!   vertices spine by spine. Within spine `i` the first `k + 1` weak
//!   vertices are private, the remaining `x_i - 1` form the shared block.
//! * [`counterexample`]: blocks `X, Y, Z, A1, A2, A3, B1, B2`; edges are the
//!   `x_i` family, then the `z_i` family, then the `y_i` family.
//! * [`bht_tight`]: blocks `V1, V2, V3`, then `v12, v13, v23`.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cover::min_cover_size;
use crate::error::GeneratorError;
use crate::{Hypergraph, VertexSet};

/// Attaches `k + 1` appendage edges to every vertex of an `r`-uniform base.
pub fn squid(base: &Hypergraph, k: usize) -> Result<Hypergraph, GeneratorError> {
    let r = base.uniformity().ok_or(GeneratorError::NonUniform)?;
    if r < 2 {
        return Err(GeneratorError::RankTooSmall { r, min: 2 });
    }
    if !base.is_connected() {
        return Err(GeneratorError::Disconnected);
    }
    let n = base.vertex_count();
    let mut edges: Vec<Vec<usize>> = base.edges().to_vec();
    let mut next = n;
    for v in 0..n {
        let shared: Vec<usize> = (next..next + r - 2).collect();
        next += r - 2;
        for _ in 0..=k {
            let mut e = vec![v];
            e.extend_from_slice(&shared);
            e.push(next);
            next += 1;
            edges.push(e);
        }
    }
    debug_assert_eq!(next, n * (r + k));
    Ok(Hypergraph::new(next, edges)?)
}

/// A strong vertex addressed by 0-based spine and position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrongVertex {
    pub spine: usize,
    pub index: usize,
}

/// Parameters of a generalized squid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsquidSpec {
    pub k: usize,
    pub r: usize,
    /// One entry per spine; spine `i` has `r - x[i]` strong and `k + x[i]`
    /// weak vertices.
    pub x: Vec<usize>,
    pub strong_edges: Vec<Vec<StrongVertex>>,
}

impl GsquidSpec {
    pub fn new(k: usize, r: usize, x: Vec<usize>) -> Self {
        Self {
            k,
            r,
            x,
            strong_edges: Vec::new(),
        }
    }

    pub fn spines(&self) -> usize {
        self.x.len()
    }

    pub fn strong_count(&self, spine: usize) -> usize {
        self.r - self.x[spine]
    }

    pub fn weak_count(&self, spine: usize) -> usize {
        self.k + self.x[spine]
    }

    /// Adds one edge per spine `i >= 2` tying it to spine 1: `s_{i,1}`, then
    /// every strong vertex of spine 1, then further strong vertices of spine
    /// `i` until the edge has `r` vertices.
    pub fn chain_spines(mut self) -> Result<Self, GeneratorError> {
        self.validate_shape()?;
        let first = self.strong_count(0);
        for spine in 1..self.spines() {
            let available = first + self.strong_count(spine);
            if available < self.r || first + 1 > self.r {
                return Err(GeneratorError::ChainInfeasible {
                    spine: spine + 1,
                    available,
                    r: self.r,
                });
            }
            let mut edge = vec![StrongVertex { spine, index: 0 }];
            edge.extend((0..first).map(|index| StrongVertex { spine: 0, index }));
            let mut index = 1;
            while edge.len() < self.r {
                edge.push(StrongVertex { spine, index });
                index += 1;
            }
            self.strong_edges.push(edge);
        }
        Ok(self)
    }

    fn validate_shape(&self) -> Result<(), GeneratorError> {
        if self.x.is_empty() {
            return Err(GeneratorError::SpineCount { d: 0, len: 0 });
        }
        if self.k < 1 {
            return Err(GeneratorError::BudgetTooSmall { k: self.k, min: 1 });
        }
        if self.r < 2 {
            return Err(GeneratorError::RankTooSmall { r: self.r, min: 2 });
        }
        for (spine, &value) in self.x.iter().enumerate() {
            if value < 1 || value > self.r - 1 {
                return Err(GeneratorError::SpineWidth {
                    spine: spine + 1,
                    value,
                    max: self.r - 1,
                });
            }
        }
        Ok(())
    }

    /// Global identifier of a strong vertex.
    pub fn strong_id(&self, v: StrongVertex) -> usize {
        (0..v.spine).map(|i| self.strong_count(i)).sum::<usize>() + v.index
    }

    fn total_strong(&self) -> usize {
        (0..self.spines()).map(|i| self.strong_count(i)).sum()
    }

    /// Global identifier of weak vertex `index` (0-based) of `spine`.
    pub fn weak_id(&self, spine: usize, index: usize) -> usize {
        self.total_strong() + (0..spine).map(|i| self.weak_count(i)).sum::<usize>() + index
    }

    pub fn vertex_count(&self) -> usize {
        self.spines() * (self.r + self.k)
    }

    /// Weak vertices of one spine, as global identifiers.
    pub fn weak_vertices(&self, spine: usize) -> Vec<usize> {
        (0..self.weak_count(spine)).map(|j| self.weak_id(spine, j)).collect()
    }

    /// The `k + 1` edges of one spine.
    pub fn spine_edges(&self, spine: usize) -> Vec<Vec<usize>> {
        let strong: Vec<usize> = (0..self.strong_count(spine))
            .map(|index| self.strong_id(StrongVertex { spine, index }))
            .collect();
        let shared: Vec<usize> = (self.k + 1..self.weak_count(spine))
            .map(|j| self.weak_id(spine, j))
            .collect();
        (0..=self.k)
            .map(|j| {
                let mut e = strong.clone();
                e.push(self.weak_id(spine, j));
                e.extend_from_slice(&shared);
                e
            })
            .collect()
    }
}

pub fn generalized_squid(spec: &GsquidSpec) -> Result<Hypergraph, GeneratorError> {
    spec.validate_shape()?;
    let n = spec.vertex_count();
    let mut edges: Vec<Vec<usize>> = (0..spec.spines()).flat_map(|i| spec.spine_edges(i)).collect();
    for (id, edge) in spec.strong_edges.iter().enumerate() {
        let bad = |reason: String| GeneratorError::StrongEdge { edge: id + 1, reason };
        if edge.len() != spec.r {
            return Err(bad(format!("has {} vertices, expected {}", edge.len(), spec.r)));
        }
        let mut ids = Vec::with_capacity(edge.len());
        for v in edge {
            if v.spine >= spec.spines() || v.index >= spec.strong_count(v.spine) {
                return Err(bad(format!(
                    "s({},{}) is not a strong vertex",
                    v.spine + 1,
                    v.index + 1
                )));
            }
            ids.push(spec.strong_id(*v));
        }
        if ids.iter().collect::<BTreeSet<_>>().len() != ids.len() {
            return Err(bad("repeats a vertex".into()));
        }
        edges.push(ids);
    }
    let h = Hypergraph::new(n, edges)?;
    if !h.is_connected() {
        return Err(GeneratorError::Disconnected);
    }
    for spine in 0..spec.spines() {
        debug_assert!(!spine_coverable_within(
            n,
            &spec.spine_edges(spine),
            &spec.weak_vertices(spine),
            spec.k
        ));
    }
    Ok(h)
}

/// Whether at most `budget` of `edges` cover all of `weak`. A valid spine
/// layout answers `false` for `budget = k`.
pub fn spine_coverable_within(n: usize, edges: &[Vec<usize>], weak: &[usize], budget: usize) -> bool {
    let target = VertexSet::from_iter_in(n, weak.iter().copied());
    let sets: Vec<VertexSet> = edges
        .iter()
        .map(|e| VertexSet::from_iter_in(n, e.iter().copied()))
        .collect();
    let refs: Vec<&VertexSet> = sets.iter().collect();
    min_cover_size(&target, &refs).is_some_and(|size| size <= budget)
}

/// The `(5 + 2k + ell)`-uniform family on `9 + 6k + 2 ell` vertices whose
/// k-power domination number is 2.
pub fn counterexample(k: usize, ell: usize) -> Result<Hypergraph, GeneratorError> {
    if k < 1 {
        return Err(GeneratorError::BudgetTooSmall { k, min: 1 });
    }
    let mut next = 0;
    let mut block = |size: usize| {
        let b: Vec<usize> = (next..next + size).collect();
        next += size;
        b
    };
    let xs = block(k + 1);
    let ys = block(k + 1);
    let zs = block(k + 1);
    let a1 = block(k + 2);
    let a2 = block(k + 2);
    let a3 = block(k + 2);
    let b1 = block(ell);
    let b2 = block(ell);
    let n = next;

    let join = |parts: &[&[usize]]| parts.concat();
    let mut edges = Vec::with_capacity(3 * (k + 1));
    edges.extend(xs.iter().map(|&x| join(&[&a1, &b1, &[x], &a2])));
    edges.extend(zs.iter().map(|&z| join(&[&a2, &b1, &[z], &a3])));
    edges.extend(ys.iter().map(|&y| join(&[&a1, &b2, &[y], &a3])));
    Ok(Hypergraph::new(n, edges)?)
}

/// Three-edge construction on which the dominating-set bound is tight.
pub fn bht_tight(r: usize) -> Result<Hypergraph, GeneratorError> {
    if r < 3 {
        return Err(GeneratorError::RankTooSmall { r, min: 3 });
    }
    let small = (r - 1) / 2;
    let large = r - 1 - small;
    let v1: Vec<usize> = (0..small).collect();
    let v2: Vec<usize> = (small..small + large).collect();
    let v3: Vec<usize> = (small + large..small + 2 * large).collect();
    let base = small + 2 * large;
    let (v12, v13, v23) = (base, base + 1, base + 2);
    let v2_prime = &v2[..small];

    let edges = vec![
        [&v1[..], &v2[..], &[v12]].concat(),
        [&v1[..], &v3[..], &[v13]].concat(),
        [v2_prime, &v3[..], &[v23]].concat(),
    ];
    Ok(Hypergraph::new(base + 3, edges)?)
}

const RANDOM_ATTEMPTS: usize = 10_000;

/// Uniformly sampled `m` distinct `r`-subsets of `0..n`, redrawn until the
/// result is connected. Deterministic in `seed`.
pub fn random_connected_uniform(n: usize, r: usize, m: usize, seed: u64) -> Result<Hypergraph, GeneratorError> {
    let infeasible = |reason: &str| GeneratorError::Infeasible {
        n,
        r,
        m,
        reason: reason.to_string(),
    };
    if r == 0 || r > n {
        return Err(infeasible("need 1 <= r <= n"));
    }
    if !binomial_at_least(n, r, m) {
        return Err(infeasible("fewer than m distinct r-subsets exist"));
    }
    if n > 1 && (r < 2 || m * (r - 1) < n - 1) {
        return Err(infeasible("too few edges to connect every vertex"));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let mut chosen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let mut e = sample(&mut rng, n, r).into_vec();
            e.sort_unstable();
            if chosen.insert(e.clone()) {
                edges.push(e);
            }
        }
        let h = Hypergraph::new(n, edges)?;
        if h.is_connected() {
            return Ok(h);
        }
    }
    Err(infeasible("retry budget exhausted"))
}

/// `C(n, r) >= m` without overflow.
fn binomial_at_least(n: usize, r: usize, m: usize) -> bool {
    let mut c: u128 = 1;
    for i in 0..r.min(n - r) {
        c = c * (n - i) as u128 / (i + 1) as u128;
        if c >= m as u128 {
            return true;
        }
    }
    c >= m as u128
}
