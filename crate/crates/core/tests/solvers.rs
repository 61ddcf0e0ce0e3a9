mod common;

use common::{arb_hypergraph, arb_rule, arb_uniform, mask, set_of, Oracle};
use hyperpd::generators::random_connected_uniform;
use hyperpd::solvers::{
    all_minimum_kpds, domination_number, epn, fewest_components_minimum_kpds, k_power_domination_number,
    verify_witness,
};
use hyperpd::{ForcingRule, Hypergraph, SolveError, VertexSet};
use proptest::prelude::*;

fn members(h: &Hypergraph, m: u32) -> Vec<usize> {
    set_of(h, m).to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gamma_pk_matches_exhaustive(h in arb_hypergraph(9, 4, 6), k in 0usize..3, rule in arb_rule()) {
        let o = Oracle::new(&h);
        let got = k_power_domination_number(&h, k, rule).unwrap();
        prop_assert_eq!(got.optimum, o.gamma_pk(k, rule));
        prop_assert_eq!(got.witness().len(), got.optimum);
        prop_assert!(verify_witness(&h, got.witness(), k, rule));
        prop_assert!(o.observes(mask(got.witness()), k, rule));
    }

    #[test]
    fn all_minimum_matches_exhaustive(h in arb_hypergraph(8, 4, 6), k in 0usize..3, rule in arb_rule()) {
        let o = Oracle::new(&h);
        let (size, masks) = o.minimum(|s| o.observes(s, k, rule));
        let got = all_minimum_kpds(&h, k, rule).unwrap();
        prop_assert_eq!(got.optimum, size);
        let mut want: Vec<Vec<usize>> = masks.iter().map(|&m| members(&h, m)).collect();
        want.sort();
        let have: Vec<Vec<usize>> = got.witnesses.iter().map(VertexSet::to_vec).collect();
        prop_assert_eq!(have, want, "witnesses are listed lexicographically");
    }

    #[test]
    fn domination_matches_exhaustive(h in arb_hypergraph(9, 4, 6)) {
        let o = Oracle::new(&h);
        let got = domination_number(&h).unwrap();
        prop_assert_eq!(got.optimum, o.gamma());
        prop_assert!(h.closed_neighborhood(got.witness()).is_full());
    }

    #[test]
    fn zero_budget_equals_domination(h in arb_hypergraph(9, 4, 6), rule in arb_rule()) {
        prop_assert_eq!(
            k_power_domination_number(&h, 0, rule).unwrap().optimum,
            domination_number(&h).unwrap().optimum
        );
    }

    #[test]
    fn larger_budget_never_hurts(h in arb_hypergraph(9, 4, 6), k in 0usize..3, rule in arb_rule()) {
        let a = k_power_domination_number(&h, k, rule).unwrap().optimum;
        let b = k_power_domination_number(&h, k + 1, rule).unwrap().optimum;
        prop_assert!(b <= a);
        let wd = k_power_domination_number(&h, k, ForcingRule::WhiteDegree).unwrap().optimum;
        let uo = k_power_domination_number(&h, k, ForcingRule::UnobservedEdges).unwrap().optimum;
        prop_assert!(wd <= uo);
    }

    #[test]
    fn epn_matches_definition(h in arb_hypergraph(8, 4, 6), bits in 1u32..) {
        let o = Oracle::new(&h);
        let s = bits & o.full();
        prop_assume!(s != 0);
        let set = set_of(&h, s);
        for v in set.iter() {
            let others = s & !(1 << v);
            let want = o.open(v) & !s & !(0..h.vertex_count())
                .filter(|&w| others >> w & 1 == 1)
                .fold(0, |m, w| m | o.open(w));
            prop_assert_eq!(mask(&epn(&h, v, &set).unwrap()), want);
        }
    }

    #[test]
    fn fewest_components_is_minimum_and_least(h in arb_uniform(8, 3, 5), k in 1usize..3) {
        let o = Oracle::new(&h);
        let (size, masks) = o.minimum(|s| o.observes(s, k, ForcingRule::WhiteDegree));
        let chosen = fewest_components_minimum_kpds(&h, k).unwrap();
        prop_assert_eq!(chosen.len(), size);
        let c = h.induced_component_count(&chosen).unwrap();
        for m in masks {
            let other = set_of(&h, m);
            let oc = h.induced_component_count(&other).unwrap();
            prop_assert!(c <= oc);
            if oc == c {
                prop_assert!(chosen.to_vec() <= other.to_vec());
            }
        }
    }
}

/// A handful of larger instances at the edge of the exhaustive range.
#[test]
fn exhaustive_at_twelve_vertices() {
    for seed in 0..4 {
        let h = random_connected_uniform(12, 3, 6, seed).unwrap();
        let o = Oracle::new(&h);
        for k in [1, 2] {
            for rule in ForcingRule::ALL {
                let got = k_power_domination_number(&h, k, rule).unwrap();
                assert_eq!(got.optimum, o.gamma_pk(k, rule), "seed {seed}, k {k}, {rule}");
            }
        }
    }
}

#[test]
fn solver_errors() {
    let empty = Hypergraph::new(0, Vec::<Vec<usize>>::new()).unwrap();
    assert!(matches!(
        k_power_domination_number(&empty, 1, ForcingRule::WhiteDegree),
        Err(SolveError::EmptyHypergraph)
    ));
    let h = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap();
    let d = h.vertex_set([0]).unwrap();
    assert!(matches!(epn(&h, 1, &d), Err(SolveError::NotAMember { vertex: 1 })));
}
