#![allow(dead_code)]

use proptest::prelude::*;
use spectral_chi::random::{random_connected_graph, rng_for};
use spectral_chi::search::{connected_codes, from_code};
use spectral_chi::{exec::Execution, Graph};

/// A random connected graph on `lo..=hi` vertices.
pub fn connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), lo..=hi, 0.05f64..0.9).prop_map(|(seed, n, p)| random_connected_graph(&mut rng_for(seed, 0), n, p))
}

/// Every connected graph on `2..=max_n` vertices, one per isomorphism class.
pub fn all_connected(max_n: usize) -> Vec<Graph> {
    connected_codes(max_n, Execution::default())
        .unwrap()
        .into_iter()
        .flat_map(|(n, codes)| codes.into_iter().map(move |c| from_code(n, c).unwrap()))
        .collect()
}
