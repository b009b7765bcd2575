#![allow(dead_code)]

use gammacert::graphs::Graph;
use proptest::prelude::*;

/// Connected graphs on `lo..=hi` vertices: a random spanning tree plus random extra edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(|n| {
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
            (Just(n), parents, proptest::collection::vec(any::<bool>(), n * (n - 1) / 2), 0.0f64..0.6)
        })
        .prop_map(|(n, parents, extra, density)| {
            let mut g = Graph::empty(n).unwrap();
            for (i, &p) in parents.iter().enumerate() {
                g.add_edge(p, i + 1).unwrap();
            }
            let mut k = 0;
            for j in 0..n {
                for i in 0..j {
                    // Thin the extra edges so sparse graphs stay common.
                    if extra[k] && ((k as f64 * 0.618).fract() < density) && !g.has_edge(i, j) {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
}

pub fn tree(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi)
        .prop_flat_map(|n| (1..n).map(|i| (0..i).boxed()).collect::<Vec<_>>())
        .prop_map(|parents| {
            let mut g = Graph::empty(parents.len() + 1).unwrap();
            for (i, &p) in parents.iter().enumerate() {
                g.add_edge(p, i + 1).unwrap();
            }
            g
        })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
