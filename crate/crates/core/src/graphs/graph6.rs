//! graph6 encoding and the `n; u-v, u-v, ...` edge-list fixture format.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(Error::Graph6("malformed size header".into()));
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!("expected {need} body bytes for n = {n}, found {}", body.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses `n; u-v, u-v, ...`.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let (n, rest) = text
        .split_once(';')
        .ok_or_else(|| Error::EdgeList("missing ';' after the vertex count".into()))?;
    let n: usize = n.trim().parse().map_err(|_| Error::EdgeList(format!("bad vertex count {n:?}")))?;
    let mut g = Graph::empty(n)?;
    for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| Error::EdgeList(format!("bad edge {item:?}")))?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::EdgeList(format!("bad edge {item:?}")));
        g.add_edge(parse(u)?, parse(v)?)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}; {}", g.n(), edges.join(", "))
}

/// graph6 if the text has no `;`, edge list otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.contains(';') {
        parse_edge_list(text)
    } else {
        parse_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build;

    #[test]
    fn known_codes() {
        assert_eq!(parse_graph6("Bw").unwrap(), build::complete(3));
        assert_eq!(parse_graph6("C~").unwrap(), build::complete(4));
        let e = parse_graph6("B?").unwrap();
        assert_eq!((e.n(), e.edge_count()), (3, 0));
        assert_eq!(to_graph6(&build::complete(4)), "C~");
    }

    #[test]
    fn malformed_inputs() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("Bww").is_err());
        assert_eq!(parse_graph6("~?@@"), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = parse_edge_list("6; 0-1, 0-2, 0-3, 1-2, 1-3, 2-3, 0-4, 4-5").unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(parse_edge_list("3; 0-3").is_err());
    }
}
