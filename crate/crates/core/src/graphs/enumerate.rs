//! Exhaustive enumeration of small connected graphs, trees, and proof kernels.
//!
//! Connected graphs grow by one vertex joined to a nonempty subset of an
//! existing class representative; trees grow by one leaf. Every connected graph
//! has a vertex whose removal keeps it connected, so both processes are complete.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, canonical_labeling, CanonicalForm};
use super::{has_strictly_dominating_nonneighbor, has_strictly_dominating_vertex, Graph, RootedKernel};
use crate::error::{Error, Result};

pub const MAX_GRAPH_N: usize = 7;
pub const MAX_TREE_N: usize = 14;

fn dedup(candidates: Vec<Graph>) -> Vec<Graph> {
    let forms: Vec<(CanonicalForm, Graph)> = candidates
        .into_par_iter()
        .map(|g| {
            let (c, _) = canonical_labeling(&g, None);
            (canonical_form(&c, None), c)
        })
        .collect();
    let map: BTreeMap<CanonicalForm, Graph> = forms.into_iter().collect();
    map.into_values().collect()
}

/// One canonical representative per isomorphism class, sorted by canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_GRAPH_N {
        return Err(Error::EnumerationCap { n, max: MAX_GRAPH_N });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let mut cands = Vec::new();
        for g in &level {
            for mask in 1u64..(1 << m) {
                let mut h = g.clone();
                let w = h.add_vertex()?;
                for v in super::bits(mask) {
                    h.add_edge(v, w)?;
                }
                cands.push(h);
            }
        }
        level = dedup(cands);
    }
    Ok(level)
}

/// One canonical representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_TREE_N {
        return Err(Error::EnumerationCap { n, max: MAX_TREE_N });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut cands = Vec::new();
        for g in &level {
            for v in 0..g.n() {
                let mut h = g.clone();
                let w = h.add_vertex()?;
                h.add_edge(v, w)?;
                cands.push(h);
            }
        }
        level = dedup(cands);
    }
    Ok(level)
}

fn rooted_classes(graphs: &[Graph], keep: impl Fn(&RootedKernel) -> bool + Sync) -> Vec<RootedKernel> {
    let found: Vec<(CanonicalForm, RootedKernel)> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            (0..g.n())
                .map(|o| RootedKernel { graph: g.clone(), root: o })
                .filter(|k| keep(k))
                .map(|k| {
                    let c = k.canonical();
                    (c.canonical_form(), c)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let map: BTreeMap<CanonicalForm, RootedKernel> = found.into_iter().collect();
    map.into_values().collect()
}

/// Rooted connected 6-vertex graphs with `deg(o) >= 3` in which no vertex strictly
/// dominates `o`, by closed neighborhoods for neighbors and open ones otherwise.
pub fn enumerate_graph_kernels() -> Vec<RootedKernel> {
    let graphs = enumerate_connected_graphs(6).expect("within cap");
    rooted_classes(&graphs, is_graph_kernel)
}

pub fn is_graph_kernel(k: &RootedKernel) -> bool {
    k.graph.n() == 6
        && k.graph.is_connected()
        && k.graph.degree(k.root) >= 3
        && !has_strictly_dominating_vertex(k)
        && !has_strictly_dominating_nonneighbor(k)
}

/// Rooted 10-vertex trees with `deg(o) >= 3`.
pub fn enumerate_tree_kernels() -> Vec<RootedKernel> {
    let trees = enumerate_trees(10).expect("within cap");
    rooted_classes(&trees, is_tree_kernel)
}

pub fn is_tree_kernel(k: &RootedKernel) -> bool {
    k.graph.n() == 10 && k.graph.is_tree() && k.graph.degree(k.root) >= 3
}

/// Brute force over all edge subsets, for cross-checking the incremental enumeration.
pub fn connected_graphs_brute_force(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let cands: Vec<Graph> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let mut g = Graph::empty(n).ok()?;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.add_edge(i, j).ok()?;
                }
            }
            g.is_connected().then_some(g)
        })
        .collect();
    dedup(cands)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let trees: Vec<usize> = (1..=8).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn caps() {
        assert!(enumerate_connected_graphs(8).is_err());
        assert!(enumerate_trees(15).is_err());
    }
}
