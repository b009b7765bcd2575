//! Canonical labelings: AHU codes for trees, individualization-refinement otherwise.
//!
//! A rooted canonical form always places the root at vertex 0.

use super::Graph;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(pub Vec<u8>);

pub fn canonical_form(g: &Graph, root: Option<usize>) -> CanonicalForm {
    let (c, _) = canonical_labeling(g, root);
    let mut bytes = Vec::with_capacity(3 + 8 * c.n());
    bytes.push(if g.is_tree() { b'T' } else { b'G' });
    bytes.push(c.n() as u8);
    bytes.push(u8::from(root.is_some()));
    for v in 0..c.n() {
        bytes.extend_from_slice(&c.row(v).to_le_bytes());
    }
    CanonicalForm(bytes)
}

pub fn canonical_graph(g: &Graph, root: Option<usize>) -> Graph {
    canonical_labeling(g, root).0
}

/// Canonically relabeled graph and the permutation `old -> new`.
pub fn canonical_labeling(g: &Graph, root: Option<usize>) -> (Graph, Vec<usize>) {
    if g.n() == 0 {
        return (g.clone(), Vec::new());
    }
    let perm = if g.is_tree() { tree_labeling(g, root) } else { ir_labeling(g, root) };
    (g.permute(&perm), perm)
}

fn ahu_code(g: &Graph, v: usize, parent: usize, codes: &mut Vec<Vec<u8>>) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = g
        .neighbors(v)
        .filter(|&u| u != parent)
        .map(|u| ahu_code(g, u, v, codes))
        .collect();
    kids.sort();
    let mut code = vec![b'('];
    for k in kids {
        code.extend(k);
    }
    code.push(b')');
    codes[v] = code.clone();
    code
}

fn tree_labeling(g: &Graph, root: Option<usize>) -> Vec<usize> {
    let n = g.n();
    let root = match root {
        Some(r) => r,
        None => {
            let cs = centers(g);
            let mut best: Option<(Vec<u8>, usize)> = None;
            for c in cs {
                let mut scratch = vec![Vec::new(); n];
                let code = ahu_code(g, c, usize::MAX, &mut scratch);
                if best.as_ref().is_none_or(|(b, _)| code < *b) {
                    best = Some((code, c));
                }
            }
            best.unwrap().1
        }
    };
    let mut codes = vec![Vec::new(); n];
    ahu_code(g, root, usize::MAX, &mut codes);
    let mut perm = vec![0; n];
    let mut next = 0;
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        perm[v] = next;
        next += 1;
        let mut kids: Vec<usize> = g.neighbors(v).filter(|&u| u != parent).collect();
        kids.sort_by(|a, b| codes[*a].cmp(&codes[*b]));
        for &k in kids.iter().rev() {
            stack.push((k, v));
        }
    }
    perm
}

fn centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; n];
    while alive > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            alive -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Equitable refinement; colors are ranks of (color, neighbor color multiset).
fn refine(g: &Graph, colors: &mut Vec<usize>) {
    let n = g.n();
    let mut count = distinct(colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        for v in 0..n {
            colors[v] = sorted.binary_search(&sigs[v]).unwrap();
        }
        let c = sorted.len();
        if c == count {
            return;
        }
        count = c;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn leaf_key(&self, perm: &[usize]) -> Vec<u64> {
        let p = self.g.permute(perm);
        (0..p.n()).map(|v| p.row(v)).collect()
    }

    fn run(&mut self, colors: Vec<usize>) {
        let n = self.g.n();
        if distinct(&colors) == n {
            let key = self.leaf_key(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, colors));
            }
            return;
        }
        // Target: the non-singleton cell with the smallest color.
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).unwrap();
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut reps: Vec<usize> = Vec::new();
        for &v in &cell {
            // Twins in one cell are swapped by an automorphism; one branch suffices.
            let twin = reps.iter().any(|&r| {
                self.g.row(r) & !(1u64 << v) == self.g.row(v) & !(1u64 << r)
            });
            if !twin {
                reps.push(v);
            }
        }
        for v in reps {
            let mut c: Vec<usize> = colors.iter().enumerate().map(|(u, &c)| 2 * c + usize::from(u != v)).collect();
            refine(self.g, &mut c);
            self.run(c);
        }
    }
}

fn ir_labeling(g: &Graph, root: Option<usize>) -> Vec<usize> {
    let mut colors: Vec<usize> = (0..g.n()).map(|v| usize::from(Some(v) != root)).collect();
    refine(g, &mut colors);
    let mut s = Search { g, best: None };
    s.run(colors);
    s.best.unwrap().1
}
