//! Simple undirected graphs on at most 64 vertices, rooted kernels, and their enumeration.

pub mod build;
pub mod canon;
pub mod enumerate;
pub mod graph6;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use build::{attach_fork, attach_path};
pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use enumerate::{enumerate_connected_graphs, enumerate_graph_kernels, enumerate_tree_kernels, enumerate_trees, is_graph_kernel, is_tree_kernel};
pub use graph6::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

pub const MAX_VERTICES: usize = 64;

/// Adjacency rows as bitsets; vertex ids are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::EdgeList(format!("self-loop at {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.n >= MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        self.adj.push(0);
        self.n += 1;
        Ok(self.n - 1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood as a bitset.
    pub fn closed_row(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Symmetric 0/1 matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| i64::from(self.has_edge(u, v))).collect())
            .collect()
    }

    /// BFS distances from `o`; `None` for unreachable vertices.
    pub fn distances(&self, o: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        if o >= self.n {
            return dist;
        }
        dist[o] = Some(0);
        let mut q = VecDeque::from([o]);
        while let Some(u) = q.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    q.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// BFS layers `V_0 = {o}, V_1, ...`, each sorted by vertex id.
    pub fn bfs_layers(&self, o: usize) -> Result<Vec<Vec<usize>>> {
        if o >= self.n {
            return Err(Error::VertexOutOfRange { vertex: o, n: self.n });
        }
        let dist = self.distances(o);
        let mut layers: Vec<Vec<usize>> = Vec::new();
        for (v, d) in dist.iter().enumerate() {
            let d = d.ok_or(Error::Disconnected)?;
            if layers.len() <= d {
                layers.resize(d + 1, Vec::new());
            }
            layers[d].push(v);
        }
        Ok(layers)
    }

    pub fn eccentricity(&self, o: usize) -> Result<usize> {
        Ok(self.bfs_layers(o)?.len() - 1)
    }

    /// Subgraph induced on `verts`, relabeled in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph { n: verts.len(), adj: vec![0; verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        g
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", to_graph6(self))
    }
}

pub(crate) fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(i)
        }
    })
}

/// A graph with a distinguished root `o`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedKernel {
    pub graph: Graph,
    pub root: usize,
}

impl RootedKernel {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::VertexOutOfRange { vertex: root, n: graph.n() });
        }
        Ok(RootedKernel { graph, root })
    }

    /// Graph6 of the graph followed by the root id, e.g. `E?bw:0`.
    pub fn id(&self) -> String {
        format!("{}:{}", to_graph6(&self.graph), self.root)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(&self.graph, Some(self.root))
    }

    /// Relabeled so that the graph is in canonical form and the root is vertex 0.
    pub fn canonical(&self) -> RootedKernel {
        let (g, perm) = canon::canonical_labeling(&self.graph, Some(self.root));
        RootedKernel { graph: g, root: perm[self.root] }
    }
}

/// Whether some `v != o` has `N[v]` strictly containing `N[o]`.
pub fn has_strictly_dominating_vertex(k: &RootedKernel) -> bool {
    let g = &k.graph;
    let no = g.closed_row(k.root);
    (0..g.n()).any(|v| {
        let nv = g.closed_row(v);
        v != k.root && nv & no == no && nv != no
    })
}

/// Whether some `v` not adjacent to `o` has `N(v)` strictly containing `N(o)`.
///
/// Such a `v` would get a larger Perron weight than `o` from the eigenvalue
/// equation whenever `H` contains all neighbors of `o`, exactly as in the
/// closed-neighborhood case.
pub fn has_strictly_dominating_nonneighbor(k: &RootedKernel) -> bool {
    let g = &k.graph;
    let no = g.row(k.root);
    (0..g.n()).any(|v| {
        let nv = g.row(v);
        v != k.root && !g.has_edge(v, k.root) && nv & no == no && nv != no
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    Graph,
    Tree,
}

/// Kernel vertices that may have neighbors outside the kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActiveSet {
    pub vertices: Vec<usize>,
}

impl ActiveSet {
    pub fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Graph kernels: all non-root vertices when the root has eccentricity at most 2,
/// otherwise the vertices outside `N[o]`. Tree kernels: vertices at distance at least
/// `ℓ - 1`, `ℓ` the eccentricity of the root (for a star this includes the root).
pub fn active_vertices(k: &RootedKernel, kind: KernelKind) -> Result<ActiveSet> {
    let g = &k.graph;
    let layers = g.bfs_layers(k.root)?;
    let ecc = layers.len() - 1;
    let vertices: Vec<usize> = match kind {
        KernelKind::Graph => {
            if ecc <= 2 {
                (0..g.n()).filter(|&v| v != k.root).collect()
            } else {
                let no = g.closed_row(k.root);
                (0..g.n()).filter(|&v| no >> v & 1 == 0).collect()
            }
        }
        KernelKind::Tree => {
            let mut v: Vec<usize> = layers.iter().skip(ecc.saturating_sub(1)).flatten().copied().collect();
            v.sort_unstable();
            v
        }
    };
    Ok(ActiveSet { vertices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layers_of_path() {
        let g = build::path(5);
        let l = g.bfs_layers(0).unwrap();
        assert_eq!(l.len(), 5);
        assert!(l.iter().all(|x| x.len() == 1));
    }

    #[test]
    fn disconnected_layers_error() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.bfs_layers(0), Err(Error::Disconnected));
    }

    #[test]
    fn domination() {
        let star = build::star(4);
        assert!(has_strictly_dominating_vertex(&RootedKernel::new(star, 1).unwrap()));
        let k4 = build::complete(4);
        assert!(!has_strictly_dominating_vertex(&RootedKernel::new(k4, 2).unwrap()));
        // C4 plus a chord-free pendant: 0 and 2 share {1, 3}; 2 also sees 4.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)]).unwrap();
        let k = RootedKernel::new(g, 0).unwrap();
        assert!(!has_strictly_dominating_vertex(&k));
        assert!(has_strictly_dominating_nonneighbor(&k));
    }
}
