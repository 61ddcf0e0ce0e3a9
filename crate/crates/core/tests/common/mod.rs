//! Brute-force reference implementations over `u32` masks. Deliberately
//! naive: nothing here shares code with the library.
#![allow(dead_code)]

use hyperpd::{ForcingRule, Hypergraph, VertexSet};
use proptest::prelude::*;

pub struct Oracle {
    pub n: usize,
    pub edges: Vec<u32>,
}

impl Oracle {
    pub fn new(h: &Hypergraph) -> Self {
        assert!(h.vertex_count() <= 20);
        let edges = h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        Self {
            n: h.vertex_count(),
            edges,
        }
    }

    pub fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn incident(&self, v: usize) -> Vec<u32> {
        self.edges.iter().copied().filter(|e| e >> v & 1 == 1).collect()
    }

    pub fn open(&self, v: usize) -> u32 {
        self.incident(v).iter().fold(0, |m, e| m | e) & !(1 << v)
    }

    pub fn closed(&self, set: u32) -> u32 {
        (0..self.n)
            .filter(|&v| set >> v & 1 == 1)
            .fold(set, |m, v| m | self.open(v))
    }

    /// Smallest number of incident edges whose union holds every white
    /// neighbor, by trying every subfamily.
    pub fn white_degree(&self, blue: u32, v: usize) -> usize {
        let white = self.open(v) & !blue;
        if white == 0 {
            return 0;
        }
        let inc = self.incident(v);
        assert!(inc.len() <= 16);
        (0u32..1 << inc.len())
            .filter(|pick| {
                let union = (0..inc.len()).filter(|i| pick >> i & 1 == 1).fold(0, |m, i| m | inc[i]);
                white & !union == 0
            })
            .map(|pick| pick.count_ones() as usize)
            .min()
            .unwrap()
    }

    pub fn unobserved(&self, blue: u32, v: usize) -> usize {
        self.incident(v).iter().filter(|&&e| e & !blue != 0).count()
    }

    pub fn can_force(&self, blue: u32, v: usize, k: usize, rule: ForcingRule) -> bool {
        blue >> v & 1 == 1
            && match rule {
                ForcingRule::WhiteDegree => self.white_degree(blue, v) <= k,
                ForcingRule::UnobservedEdges => self.unobserved(blue, v) <= k,
            }
    }

    /// Fires the lowest eligible vertex that changes something, one at a
    /// time, until nothing changes.
    pub fn closure(&self, mut blue: u32, k: usize, rule: ForcingRule) -> u32 {
        'outer: loop {
            for v in 0..self.n {
                if self.open(v) & !blue != 0 && self.can_force(blue, v, k, rule) {
                    blue |= self.open(v);
                    continue 'outer;
                }
            }
            return blue;
        }
    }

    pub fn observes(&self, set: u32, k: usize, rule: ForcingRule) -> bool {
        self.closure(self.closed(set), k, rule) == self.full()
    }

    pub fn dominates(&self, set: u32) -> bool {
        self.closed(set) == self.full()
    }

    /// Every minimum set satisfying `pred`, as ascending masks.
    pub fn minimum<F: Fn(u32) -> bool>(&self, pred: F) -> (usize, Vec<u32>) {
        let mut best = usize::MAX;
        let mut sets = Vec::new();
        for s in 1..=self.full() {
            let size = s.count_ones() as usize;
            if size > best || !pred(s) {
                continue;
            }
            if size < best {
                best = size;
                sets.clear();
            }
            sets.push(s);
        }
        (best, sets)
    }

    pub fn gamma_pk(&self, k: usize, rule: ForcingRule) -> usize {
        self.minimum(|s| self.observes(s, k, rule)).0
    }

    pub fn gamma(&self) -> usize {
        self.minimum(|s| self.dominates(s)).0
    }

    /// Reachability by repeated squaring of the adjacency relation.
    pub fn connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut reach: Vec<u32> = (0..self.n).map(|v| self.open(v) | 1 << v).collect();
        for _ in 0..self.n {
            reach = (0..self.n)
                .map(|v| (0..self.n).filter(|&u| reach[v] >> u & 1 == 1).fold(0, |m, u| m | reach[u]))
                .collect();
        }
        reach[0] == self.full()
    }
}

pub fn mask(set: &VertexSet) -> u32 {
    set.iter().fold(0, |m, v| m | 1 << v)
}

pub fn set_of(h: &Hypergraph, m: u32) -> VertexSet {
    VertexSet::from_iter_in(h.vertex_count(), (0..h.vertex_count()).filter(|v| m >> v & 1 == 1))
}

/// Arbitrary hypergraph (not necessarily uniform or connected) with
/// `1..=max_n` vertices and edges of size `1..=max_r`.
pub fn arb_hypergraph(max_n: usize, max_r: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let edge = proptest::collection::btree_set(0..n, 1..=max_r.min(n));
        proptest::collection::vec(edge, 0..=max_m).prop_map(move |edges| {
            Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>())).unwrap()
        })
    })
}

/// Arbitrary `r`-uniform hypergraph with `r..=max_n` vertices.
pub fn arb_uniform(max_n: usize, r: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (r..=max_n).prop_flat_map(move |n| {
        let edge = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), r);
        proptest::collection::vec(edge, 1..=max_m).prop_map(move |edges| Hypergraph::new(n, edges).unwrap())
    })
}

pub fn arb_rule() -> impl Strategy<Value = ForcingRule> {
    prop_oneof![Just(ForcingRule::WhiteDegree), Just(ForcingRule::UnobservedEdges)]
}
