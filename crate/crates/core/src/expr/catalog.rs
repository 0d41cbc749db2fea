//! Constructors for the named small graphs.

use crate::graph::{Graph, GraphError};

/// `k` isolated vertices.
pub fn edgeless(k: usize) -> Result<Graph, GraphError> {
    Graph::empty(k)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::complete(n)
}

/// The path on `n` vertices `0-1-...-(n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// The cycle on `n >= 3` vertices in label order.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    assert!(n >= 3, "cycles need at least three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Complete multipartite graph with the given part sizes, parts laid out
/// consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// K4 minus an edge; the missing edge is `2-3`.
pub fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("fixed graph")
}

/// Triangle `0,1,2` with pendant edge `2-3`.
pub fn paw() -> Graph {
    Graph::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).expect("fixed graph")
}

/// Triangle `0,1,2` with pendant path `2-3-4`.
pub fn hammer() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).expect("fixed graph")
}

/// Claw with centre 0 and the edge `0-3` subdivided by vertex 4.
pub fn chair() -> Graph {
    Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).expect("fixed graph")
}

/// Path `0-1-2-3` plus vertex 4 adjacent to all of it.
pub fn gem() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]).expect("fixed graph")
}

pub fn claw() -> Graph {
    complete_multipartite(&[1, 3]).expect("fixed graph")
}

/// `k` isolated vertices plus one edge.
pub fn edgeless_plus_edge(k: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(k + 2)?;
    g.add_edge(k, k + 1);
    Ok(g)
}

/// Complement of `k` isolated vertices plus one edge: `K_{k+2}` minus an edge.
pub fn co_edgeless_plus_edge(k: usize) -> Result<Graph, GraphError> {
    Ok(edgeless_plus_edge(k)?.complement())
}

/// Graph named in expressions by a bare identifier.
pub fn by_name(name: &str) -> Option<Graph> {
    match name {
        "D" => Some(diamond()),
        "Z1" => Some(paw()),
        "Z2" => Some(hammer()),
        "chair" => Some(chair()),
        "gem" => Some(gem()),
        _ => None,
    }
}

pub const NAMES: [&str; 5] = ["D", "Z1", "Z2", "chair", "gem"];
