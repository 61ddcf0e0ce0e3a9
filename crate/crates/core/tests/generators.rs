mod common;

use common::{arb_uniform, Oracle};
use hyperpd::generators::{
    bht_tight, counterexample, generalized_squid, random_connected_uniform, spine_coverable_within, squid, GsquidSpec,
};
use hyperpd::solvers::k_power_domination_number;
use hyperpd::{serialize_hgr, ForcingRule, GeneratorError, Hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn squid_shape(base in arb_uniform(5, 3, 3), k in 1usize..3) {
        prop_assume!(base.is_connected());
        let (n, m) = (base.vertex_count(), base.edge_count());
        let h = squid(&base, k).unwrap();
        prop_assert_eq!(h.vertex_count(), n * (3 + k));
        prop_assert_eq!(h.edge_count(), m + n * (k + 1));
        prop_assert_eq!(h.uniformity(), Some(3));
        prop_assert!(h.is_connected());
        let g = k_power_domination_number(&h, k, ForcingRule::WhiteDegree).unwrap().optimum;
        prop_assert_eq!(g, n);
    }

    #[test]
    fn random_is_connected_uniform_and_seeded(n in 4usize..12, r in 2usize..5, extra in 0usize..4, seed in any::<u64>()) {
        prop_assume!(r <= n);
        let m = (n - 1).div_ceil(r - 1) + extra;
        match random_connected_uniform(n, r, m, seed) {
            Ok(h) => {
                prop_assert!(h.is_connected());
                prop_assert_eq!(h.uniformity(), Some(r));
                prop_assert_eq!(h.edge_count(), m);
                let mut edges = h.edges().to_vec();
                edges.dedup();
                prop_assert_eq!(edges.len(), m, "edges are distinct");
                let again = random_connected_uniform(n, r, m, seed).unwrap();
                prop_assert_eq!(serialize_hgr(&again), serialize_hgr(&h));
            }
            Err(GeneratorError::Infeasible { .. }) => {}
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }
}

#[test]
fn counterexample_shape() {
    for k in 1..=3 {
        for ell in 0..=2 {
            let h = counterexample(k, ell).unwrap();
            assert_eq!(h.vertex_count(), 9 + 6 * k + 2 * ell);
            assert_eq!(h.edge_count(), 3 * (k + 1));
            assert_eq!(h.uniformity(), Some(5 + 2 * k + ell));
            assert!(h.is_connected());
        }
    }
    assert!(matches!(counterexample(0, 0), Err(GeneratorError::BudgetTooSmall { .. })));
}

#[test]
fn bht_shape() {
    for r in 3..=9 {
        let h = bht_tight(r).unwrap();
        assert_eq!(h.vertex_count(), (r - 1) / 2 + 2 * (r - 1).div_ceil(2) + 3);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(h.uniformity(), Some(r));
    }
}

#[test]
fn gsquid_spines_need_k_plus_one_edges() {
    for (k, r, x) in [(1, 3, vec![1, 1]), (1, 4, vec![1, 2]), (2, 3, vec![1])] {
        let spec = GsquidSpec::new(k, r, x).chain_spines().unwrap();
        let h = generalized_squid(&spec).unwrap();
        assert_eq!(h.vertex_count(), spec.spines() * (r + k));
        assert_eq!(h.uniformity(), Some(r));
        for i in 0..spec.spines() {
            let weak = spec.weak_vertices(i);
            assert_eq!(weak.len(), k + spec.x[i]);
            let edges = h.edges().to_vec();
            assert!(!spine_coverable_within(h.vertex_count(), &edges, &weak, k));
            assert!(spine_coverable_within(h.vertex_count(), &edges, &weak, k + 1));
        }
    }
}

#[test]
fn generator_rejections() {
    let mixed = Hypergraph::new(4, [vec![0, 1, 2], vec![2, 3]]).unwrap();
    assert!(matches!(squid(&mixed, 1), Err(GeneratorError::NonUniform)));
    let split = Hypergraph::new(6, [vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert!(matches!(squid(&split, 1), Err(GeneratorError::Disconnected)));
    assert!(matches!(bht_tight(2), Err(GeneratorError::RankTooSmall { .. })));
    assert!(random_connected_uniform(5, 3, 11, 0).is_err());
    assert!(random_connected_uniform(9, 3, 3, 0).is_err());
    let two = GsquidSpec::new(1, 3, vec![1, 1]);
    assert!(generalized_squid(&two).is_err(), "spines without a strong edge are disconnected");
}

#[test]
fn small_squid_is_certified_exhaustively() {
    let base = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
    let h = squid(&base, 1).unwrap();
    assert_eq!(Oracle::new(&h).gamma_pk(1, ForcingRule::WhiteDegree), 3);
}
