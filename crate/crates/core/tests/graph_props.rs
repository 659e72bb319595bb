mod common;

use proptest::prelude::*;
use spectral_chi::{PairKind, VertexSubset};

proptest! {
    #[test]
    fn handshake_and_pair_symmetry(g in common::connected(1, 12)) {
        let total: usize = g.degrees().iter().sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        for v in 0..g.n() {
            for w in v + 1..g.n() {
                let a = g.classify_pair(v, w).unwrap();
                prop_assert_eq!(a, g.classify_pair(w, v).unwrap());
                // brute-force neighborhood comparison
                let open = |x: usize, y: usize| (0..g.n()).filter(|&u| u != x && u != y && g.adjacent(x, u)).collect::<Vec<_>>();
                let expected = if open(v, w) != open(w, v) {
                    PairKind::Neither
                } else if g.adjacent(v, w) {
                    PairKind::Twin
                } else {
                    PairKind::Duplicate
                };
                prop_assert_eq!(a, expected);
            }
        }
    }

    #[test]
    fn edge_counts_between_are_symmetric(g in common::connected(2, 12), split in any::<u64>()) {
        let side = |v: usize| (split >> (2 * v)) & 3;
        let u1 = VertexSubset::new(&g, (0..g.n()).filter(|&v| side(v) == 1)).unwrap();
        let u2 = VertexSubset::new(&g, (0..g.n()).filter(|&v| side(v) == 2)).unwrap();
        let a = g.edge_count_between(&u1, &u2).unwrap();
        prop_assert_eq!(a, g.edge_count_between(&u2, &u1).unwrap());
        let brute = g.edges().filter(|&(x, y)| (side(x), side(y)) == (1, 2) || (side(x), side(y)) == (2, 1)).count();
        prop_assert_eq!(a, brute);
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in common::connected(2, 12), keep in any::<u64>()) {
        let members: Vec<usize> = (0..g.n()).filter(|&v| keep >> v & 1 == 1).collect();
        prop_assume!(!members.is_empty());
        let u = VertexSubset::new(&g, members.iter().copied()).unwrap();
        let (h, map) = g.induced_subgraph(&u).unwrap();
        prop_assert_eq!(h.n(), members.len());
        for &a in &members {
            for &b in &members {
                if a != b {
                    prop_assert_eq!(g.adjacent(a, b), h.adjacent(map[a].unwrap(), map[b].unwrap()));
                }
            }
        }
        prop_assert!((0..g.n()).all(|v| map[v].is_some() == members.contains(&v)));
    }
}
