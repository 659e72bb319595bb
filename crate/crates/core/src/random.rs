//! Reproducible random graphs. Instance `i` of a corpus with seed `s` is
//! drawn from its own ChaCha stream `(s, i)`, so a corpus is identical
//! whether it is generated sequentially or in parallel.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compose::{edge_disjoint_union_labeled, GluedGraph};
use crate::exec::Execution;
use crate::graph::Graph;

pub fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A connected graph on `n` vertices: a random recursive tree plus each
/// remaining pair with probability `p`, under a random relabeling.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.push((label[u], label[v]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("labels are in range")
}

/// `count` connected graphs with `2 ≤ n ≤ max_n` and edge densities spread
/// over `[0.05, 0.8]`.
pub fn corpus(seed: u64, count: usize, max_n: usize, exec: Execution) -> Vec<Graph> {
    assert!(max_n >= 2, "corpus needs max_n >= 2");
    exec.map_range(count, |i| {
        let mut rng = rng_for(seed, i as u64);
        let n = rng.random_range(2..=max_n);
        let p = rng.random_range(0.05..0.8);
        random_connected_graph(&mut rng, n, p)
    })
}

/// Two connected graphs with a glue vertex on each.
#[derive(Clone, Debug)]
pub struct GluePair {
    pub g1: Graph,
    pub x1: usize,
    pub g2: Graph,
    pub x2: usize,
}

pub fn glue_pairs(seed: u64, count: usize, max_n: usize, exec: Execution) -> Vec<GluePair> {
    exec.map_range(count, |i| {
        let mut rng = rng_for(seed, i as u64);
        let mut side = || {
            let n = rng.random_range(2..=max_n);
            let p = rng.random_range(0.05..0.8);
            let g = random_connected_graph(&mut rng, n, p);
            let x = rng.random_range(0..n);
            (g, x)
        };
        let (g1, x1) = side();
        let (g2, x2) = side();
        GluePair { g1, x1, g2, x2 }
    })
}

/// A random graph on at most `max_n` vertices with its edges split between
/// two sides, returned as the two labeled sides and their union. Both sides
/// keep only the vertices their edges touch.
#[derive(Clone, Debug)]
pub struct Overlay {
    pub g1: Graph,
    pub labels1: Vec<usize>,
    pub g2: Graph,
    pub labels2: Vec<usize>,
    pub union: GluedGraph,
}

fn side_graph(edges: &[(usize, usize)]) -> (Graph, Vec<usize>) {
    let mut labels: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let at = |x: usize| labels.binary_search(&x).expect("label present");
    let local: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (at(a), at(b))).collect();
    (Graph::from_edge_list(labels.len(), &local).expect("valid side"), labels)
}

pub fn overlays(seed: u64, count: usize, max_n: usize, exec: Execution) -> Vec<Overlay> {
    assert!(max_n >= 3, "overlays need max_n >= 3");
    exec.map_range(count, |i| {
        let mut rng = rng_for(seed, i as u64);
        loop {
            let n = rng.random_range(3..=max_n);
            let p = rng.random_range(0.1..0.8);
            let g = random_connected_graph(&mut rng, n, p);
            let (mut e1, mut e2) = (Vec::new(), Vec::new());
            for e in g.edges() {
                if rng.random_bool(0.5) {
                    e1.push(e);
                } else {
                    e2.push(e);
                }
            }
            if e1.is_empty() || e2.is_empty() {
                continue;
            }
            let (g1, labels1) = side_graph(&e1);
            let (g2, labels2) = side_graph(&e2);
            let union = edge_disjoint_union_labeled(&g1, &labels1, &g2, &labels2).expect("sides are edge-disjoint");
            return Overlay { g1, labels1, g2, labels2, union };
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_reproducible_and_connected() {
        let a = corpus(7, 50, 10, Execution::Sequential);
        let b = corpus(7, 50, 10, Execution::Parallel);
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.is_connected() && g.n() >= 2 && g.n() <= 10));
        assert_ne!(a, corpus(8, 50, 10, Execution::Sequential));
    }

    #[test]
    fn overlays_cover_the_source_graph() {
        for o in overlays(3, 20, 10, Execution::Sequential) {
            assert_eq!(o.union.result.edge_count(), o.g1.edge_count() + o.g2.edge_count());
            assert!(o.union.result.is_connected());
            assert!(o.g1.isolated_vertex().is_none() && o.g2.isolated_vertex().is_none());
        }
        let p = glue_pairs(1, 10, 6, Execution::Parallel);
        assert!(p.iter().all(|q| q.x1 < q.g1.n() && q.x2 < q.g2.n()));
    }
}
