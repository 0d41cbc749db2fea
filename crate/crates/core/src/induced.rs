//! Induced-subgraph containment and freeness.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{bit, bits, canonical_code, decode_graph6, Graph};

/// `0[i]` is the host vertex that pattern vertex `i` maps to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding(pub Vec<usize>);

impl Embedding {
    /// Whether this is an induced embedding of `pattern` into `host`.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let map = &self.0;
        if map.len() != pattern.order() || map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let image = map.iter().fold(0u64, |acc, &h| acc | bit(h));
        if image.count_ones() as usize != map.len() {
            return false;
        }
        (0..map.len()).all(|i| {
            ((i + 1)..map.len()).all(|j| pattern.has_edge(i, j) == host.has_edge(map[i], map[j]))
        })
    }

    pub fn vertex_mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &h| acc | bit(h))
    }
}

/// Finds an induced copy of `pattern` in `host`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(Embedding(Vec::new()));
    }
    let pm = pattern.edge_count();
    let hm = host.edge_count();
    if pm > hm || k * (k - 1) / 2 - pm > n * (n - 1) / 2 - hm {
        return None;
    }
    let plan = Plan::new(pattern);
    // Host vertices able to host each pattern degree profile.
    let mut fit = Vec::with_capacity(k);
    for &p in &plan.order {
        let d = pattern.degree(p);
        let nd = k - 1 - d;
        let mask = (0..n)
            .filter(|&h| host.degree(h) >= d && n - 1 - host.degree(h) >= nd)
            .fold(0u64, |acc, h| acc | bit(h));
        if mask == 0 {
            return None;
        }
        fit.push(mask);
    }
    let mut image = vec![0usize; k];
    if extend(host, &plan, &fit, &mut image, 0, 0) {
        let mut map = vec![0usize; k];
        for (i, &p) in plan.order.iter().enumerate() {
            map[p] = image[i];
        }
        Some(Embedding(map))
    } else {
        None
    }
}

/// Pattern vertices in search order with their links to earlier positions.
struct Plan {
    order: Vec<usize>,
    // For position i, positions j < i adjacent to it, as a mask over positions.
    earlier_adjacent: Vec<u64>,
}

impl Plan {
    fn new(pattern: &Graph) -> Self {
        let k = pattern.order();
        let mut order = Vec::with_capacity(k);
        let mut placed = 0u64;
        while order.len() < k {
            // Most links into the placed set, then highest degree, then lowest label.
            let next = (0..k)
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| {
                    let links = (pattern.neighbours(v) & placed).count_ones();
                    (links, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            order.push(next);
            placed |= bit(next);
        }
        let mut position = vec![0usize; k];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let earlier_adjacent = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                bits(pattern.neighbours(v))
                    .filter(|&u| position[u] < i)
                    .fold(0u64, |acc, u| acc | bit(position[u]))
            })
            .collect();
        Self { order, earlier_adjacent }
    }
}

fn extend(host: &Graph, plan: &Plan, fit: &[u64], image: &mut [usize], depth: usize, used: u64) -> bool {
    if depth == image.len() {
        return true;
    }
    let mut cand = fit[depth] & !used;
    let adjacent = plan.earlier_adjacent[depth];
    for j in 0..depth {
        let row = host.neighbours(image[j]);
        if adjacent & bit(j) != 0 {
            cand &= row;
        } else {
            cand &= !row;
        }
        if cand == 0 {
            return false;
        }
    }
    for h in bits(cand) {
        image[depth] = h;
        if extend(host, plan, fit, image, depth + 1, used | bit(h)) {
            return true;
        }
    }
    false
}

/// A forbidden pattern found in a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Index into the pattern list.
    pub pattern: usize,
    pub embedding: Embedding,
}

/// The first pattern (in list order) contained in `g`, with an embedding.
pub fn find_violation(g: &Graph, patterns: &[Graph]) -> Option<Violation> {
    patterns
        .iter()
        .enumerate()
        .find_map(|(i, p)| contains_induced(g, p).map(|embedding| Violation { pattern: i, embedding }))
}

pub fn is_free(g: &Graph, patterns: &[Graph]) -> bool {
    find_violation(g, patterns).is_none()
}

/// Largest graph accepted by [`induced_closure`].
pub const CLOSURE_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("induced closure needs at most {CLOSURE_MAX_ORDER} vertices, got {0}")]
pub struct ClosureTooLarge(pub usize);

/// All induced subgraphs of `g` up to isomorphism, keyed by order. Each
/// order lists canonical forms sorted by canonical code.
pub fn induced_closure(g: &Graph) -> Result<BTreeMap<usize, Vec<Graph>>, ClosureTooLarge> {
    let n = g.order();
    if n > CLOSURE_MAX_ORDER {
        return Err(ClosureTooLarge(n));
    }
    let codes: BTreeSet<_> = (1..(1u64 << n)).map(|s| canonical_code(&g.induced_by_mask(s))).collect();
    let mut out: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for code in codes {
        let h = decode_graph6(code.as_str()).expect("canonical codes are valid graph6");
        out.entry(h.order()).or_default().push(h);
    }
    Ok(out)
}
