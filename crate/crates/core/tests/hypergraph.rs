mod common;

use common::{arb_hypergraph, set_of, Oracle};
use hyperpd::{parse_hgr, serialize_hgr, Hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn connectivity_matches_reachability(h in arb_hypergraph(8, 4, 6)) {
        let o = Oracle::new(&h);
        prop_assert_eq!(h.is_connected(), o.connected());
        prop_assert_eq!(h.induced_component_count(&h.all_vertices()).unwrap() == 1, h.is_connected());
    }

    #[test]
    fn neighborhoods_match(h in arb_hypergraph(8, 4, 6), bits in any::<u32>()) {
        let o = Oracle::new(&h);
        for v in 0..h.vertex_count() {
            prop_assert_eq!(common::mask(h.neighbors(v).unwrap()), o.open(v));
            prop_assert!(!h.neighbors(v).unwrap().contains(v));
            prop_assert_eq!(h.degree(v), o.incident(v).len());
        }
        let s = set_of(&h, bits & o.full());
        prop_assert_eq!(common::mask(&h.closed_neighborhood(&s)), o.closed(common::mask(&s)));
    }

    /// Components of the subhypergraph induced on a set: each is connected,
    /// and no adjacency crosses between them.
    #[test]
    fn component_count_bounds(h in arb_hypergraph(8, 4, 6), bits in 1u32..) {
        let o = Oracle::new(&h);
        let s = bits & o.full();
        prop_assume!(s != 0);
        let set = set_of(&h, s);
        let c = h.induced_component_count(&set).unwrap();
        prop_assert!(c >= 1 && c <= set.len());
        // Count by flood fill over the oracle adjacency restricted to `s`.
        let mut seen = 0u32;
        let mut count = 0;
        for start in 0..h.vertex_count() {
            if s >> start & 1 == 0 || seen >> start & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier = 1u32 << start;
            while frontier != 0 {
                seen |= frontier;
                let mut next = 0;
                for v in 0..h.vertex_count() {
                    if frontier >> v & 1 == 1 {
                        next |= o.open(v) & s;
                    }
                }
                frontier = next & !seen;
            }
        }
        prop_assert_eq!(c, count);
    }

    #[test]
    fn hgr_round_trip(h in arb_hypergraph(10, 5, 8)) {
        let text = serialize_hgr(&h);
        let back = parse_hgr(&text).unwrap();
        prop_assert_eq!(serialize_hgr(&back), text);
        prop_assert_eq!(back.edges(), h.edges());
    }
}

#[test]
fn trivial_orders() {
    assert!(!Hypergraph::new(0, Vec::<Vec<usize>>::new()).unwrap().is_connected());
    assert!(Hypergraph::new(1, Vec::<Vec<usize>>::new()).unwrap().is_connected());
    let h = Hypergraph::new(3, [vec![0, 1]]).unwrap();
    assert!(h.induced_component_count(&h.empty_set()).is_err());
    assert!(h.has_isolated_vertex());
}
