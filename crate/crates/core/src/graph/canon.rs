//! Canonical labelling by partition refinement and individualization.
//!
//! The search explores the individualization-refinement tree, keeps the leaf
//! whose relabelled adjacency rows are lexicographically largest, and prunes
//! children that are equivalent under automorphisms discovered at earlier
//! leaves (restricted to those fixing the current prefix pointwise).

use std::collections::VecDeque;
use std::fmt;

use super::graph6::encode_bytes;
use super::{bit, bits, Graph, MAX_ORDER};

/// A canonical relabelling: `form` is `g.permuted(&order)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub order: Vec<usize>,
    pub form: Graph,
}

/// graph6 bytes of the canonical form. Byte order sorts by vertex count first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode(encode_bytes(&canonical_form(g).form))
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g).form == canonical_form(h).form
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n <= 1 {
        return CanonicalForm { order: (0..n).collect(), form: g.clone() };
    }
    let mut cells = degree_partition(g);
    let queue = cells.iter().copied().collect();
    refine(g.rows(), &mut cells, queue);
    let mut search = Search {
        rows: g.rows(),
        n,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.explore(&cells, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    CanonicalForm { order: best.order, form: Graph::from_rows_unchecked(best.rows) }
}

/// Initial cells grouped by degree, ascending.
fn degree_partition(g: &Graph) -> Vec<u64> {
    let mut by_degree = [0u64; MAX_ORDER];
    let mut max = 0;
    for v in 0..g.order() {
        let d = g.degree(v);
        by_degree[d] |= bit(v);
        max = max.max(d);
    }
    by_degree[..=max].iter().copied().filter(|&c| c != 0).collect()
}

/// Refines `cells` to the coarsest equitable partition below it, using the
/// splitters in `queue`. Every step depends only on cell positions and
/// neighbour counts, so the result commutes with relabelling.
fn refine(rows: &[u64], cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let mut groups: Vec<(u32, u64)> = Vec::with_capacity(MAX_ORDER);
    while let Some(w) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() == 1 {
                i += 1;
                continue;
            }
            groups.clear();
            for v in bits(cell) {
                let c = (rows[v] & w).count_ones();
                match groups.iter_mut().find(|(k, _)| *k == c) {
                    Some((_, m)) => *m |= bit(v),
                    None => groups.push((c, bit(v))),
                }
            }
            if groups.len() == 1 {
                i += 1;
                continue;
            }
            groups.sort_unstable_by_key(|&(c, _)| c);
            cells.splice(i..=i, groups.iter().map(|&(_, m)| m));
            queue.extend(groups.iter().map(|&(_, m)| m));
            i += groups.len();
        }
    }
}

#[derive(Clone)]
struct Leaf {
    path: Vec<usize>,
    order: Vec<usize>,
    rows: Vec<u64>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Returns `Some(d)` when an automorphism shows that everything below
    /// depth `d` on the current path repeats an explored subtree.
    fn explore(&mut self, cells: &[u64], prefix: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            return self.leaf(cells, prefix);
        };
        let depth = prefix.len();
        let cell = cells[t];
        let mut tried = 0u64;
        for v in bits(cell) {
            if tried != 0 && self.equivalent_to_tried(prefix, v, tried) {
                continue;
            }
            tried |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(cell & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.rows, &mut child, VecDeque::from([bit(v)]));
            prefix.push(v);
            let jump = self.explore(&child, prefix);
            prefix.pop();
            if let Some(d) = jump {
                if d < depth {
                    return jump;
                }
            }
        }
        None
    }

    /// Whether `v` shares an orbit with an explored sibling under the stored
    /// automorphisms that fix `prefix` pointwise.
    fn equivalent_to_tried(&self, prefix: &[usize], v: usize, tried: u64) -> bool {
        let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; MAX_ORDER], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] as usize != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x] as usize));
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        bits(tried).any(|u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut position = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| bits(self.rows[v]).fold(0u64, |acc, u| acc | bit(position[u])))
            .collect();
        let leaf = Leaf { path: path.to_vec(), order, rows };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let from = first.order.clone();
            let d = common_prefix(&first.path, path);
            self.record_automorphism(&from, &leaf.order);
            return Some(d);
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                None
            }
            std::cmp::Ordering::Equal => {
                let from = best.order.clone();
                let d = common_prefix(&best.path, path);
                self.record_automorphism(&from, &leaf.order);
                Some(d)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    /// Stores the automorphism sending `from[i]` to `to[i]`.
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0u8; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b as u8;
        }
        self.automorphisms.push(gamma);
    }
}
