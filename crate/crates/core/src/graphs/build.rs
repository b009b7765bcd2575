//! Graph constructors: standard families, pendant paths, and forks.

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("size within cap");
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("size within cap");
    for v in 1..n {
        g.add_edge(v - 1, v).unwrap();
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0).unwrap();
    }
    g
}

/// Star `S_n` on `n` vertices with center 0.
pub fn star(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("size within cap");
    for v in 1..n {
        g.add_edge(0, v).unwrap();
    }
    g
}

/// Diamond `K4` minus an edge. Vertex 0 has degree 2 (`s`), vertex 1 degree 3 (`t`).
pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

pub const DIAMOND_S: usize = 0;
pub const DIAMOND_T: usize = 1;

/// `H +_v P_k`: a path of `k` new vertices joined to `v` by one edge.
/// New vertices get ids `n, n+1, ..., n+k-1`, the last one being the free end.
pub fn attach_path(h: &Graph, v: usize, k: usize) -> Result<Graph> {
    if v >= h.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: h.n() });
    }
    let mut g = h.clone();
    let mut prev = v;
    for _ in 0..k {
        let w = g.add_vertex()?;
        g.add_edge(prev, w)?;
        prev = w;
    }
    Ok(g)
}

/// `H +_v F_{k,l}`: a pendant path of `k` vertices at `v` whose last vertex gets `l` leaves.
pub fn attach_fork(h: &Graph, v: usize, k: usize, l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::InvalidArgument(format!("fork needs at least 2 prongs, got {l}")));
    }
    if k < 1 {
        return Err(Error::InvalidArgument("fork needs a path of at least one vertex".into()));
    }
    let mut g = attach_path(h, v, k)?;
    let end = g.n() - 1;
    for _ in 0..l {
        let w = g.add_vertex()?;
        g.add_edge(end, w)?;
    }
    Ok(g)
}

/// Last vertex of the pendant path created by `attach_path(h, v, k)`, for `k >= 1`.
pub fn path_end(h: &Graph, k: usize) -> usize {
    h.n() + k - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn attach_counts() {
        let k4 = complete(4);
        assert_eq!(attach_path(&k4, 0, 2).unwrap().n(), 6);
        assert_eq!(attach_path(&k4, 0, 0).unwrap(), k4);
        let g = attach_fork(&k4, 0, 5, 2).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(g.degree(path_end(&k4, 5)), 3);
        assert!(attach_fork(&k4, 0, 5, 1).is_err());
    }

    #[test]
    fn star_plus_path_layers() {
        let g = attach_path(&star(5), 0, 5).unwrap();
        let sizes: Vec<usize> = g.bfs_layers(0).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 5, 1, 1, 1, 1]);
    }
}
