//! Property-based invariants over randomly generated graphs.

use proptest::prelude::*;

use critcolor::coloring::chromatic_number;
use critcolor::formats::{from_graph6, to_graph6};
use critcolor::graph::{clique_number, Graph, VertexSet};
use critcolor::mozhan::{
    find_minimal_partitioned_coloring, internal_edges, swap, z_component, PartitionScheme,
    SearchMode,
};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(12)) {
        let encoded = to_graph6(&g);
        let back = from_graph6(&encoded).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edge_count(), g.edge_count());
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(back.has_edge(u, v), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph(12)) {
        let sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn chromatic_bounds(g in arb_graph(8)) {
        let (chi, witness) = chromatic_number(&g);
        prop_assert!(critcolor::coloring::is_proper(&g, &witness).unwrap());
        prop_assert!(chi >= clique_number(&g));
        prop_assert!(chi <= g.max_degree().unwrap_or(0) + 1);
    }

    #[test]
    fn induced_subgraph_preserves_adjacency(g in arb_graph(10), mask in any::<u16>()) {
        let s: VertexSet = g.vertices().filter(|&v| mask & (1 << v) != 0).collect();
        let (sub, map) = g.induced_subgraph(&s).unwrap();
        prop_assert_eq!(sub.n(), s.len());
        for i in 0..sub.n() {
            for j in 0..sub.n() {
                prop_assert_eq!(sub.has_edge(i, j), g.has_edge(map[i], map[j]));
            }
        }
    }

    #[test]
    fn swap_preserves_objective_and_form(g in arb_graph(7), pick in any::<u32>()) {
        let (chi, _) = chromatic_number(&g);
        prop_assume!(chi >= 3);
        let scheme = if chi >= 5 {
            PartitionScheme::new(vec![2, chi - 3])
        } else {
            PartitionScheme::new(vec![chi - 1])
        };
        let x = (pick as usize) % g.n();
        let pc = match find_minimal_partitioned_coloring(&g, &scheme, x, SearchMode::Exact) {
            Ok(pc) => pc,
            Err(_) => return Ok(()), // x not critical or disconnected form
        };
        let before = internal_edges(&g, &pc).unwrap();
        for i in 0..scheme.num_groups() {
            let z = z_component(&g, &pc, x, i).unwrap();
            for &y in z.iter().filter(|&&v| v != x) {
                if let Ok(next) = swap(&g, &pc, y) {
                    prop_assert_eq!(next.singleton(), y);
                    prop_assert_eq!(internal_edges(&g, &next).unwrap(), before);
                    prop_assert!(next.assignment().iter().filter(|&&c| c == 0).count() == 1);
                }
            }
        }
    }
}
