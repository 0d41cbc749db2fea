//! All graphs of a given order up to isomorphism, by canonical augmentation.
//!
//! A child `C = P + v` of a canonical parent `P` is accepted when `v` could be
//! the canonically chosen deletion: among the vertices of maximum invariant
//! key (degree, then sum of neighbour degrees) take the one placed last by
//! the canonical labelling, call it `w`; accept iff `C - w` is isomorphic to
//! `P`. Each class is then produced only from the parent `C - w`, and
//! isomorphic children of one parent are deduplicated by canonical code.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{bit, bits, canonical_code, canonical_form, encode_graph6, Graph};

use super::HarnessError;

/// Largest order the built-in generator accepts.
pub const GENERATOR_MAX_ORDER: usize = 10;

/// Optional hereditary filter: graphs failing it are dropped together with
/// all their extensions. Only sound for properties closed under induced
/// subgraphs, such as freeness.
pub type Hereditary<'a> = Option<&'a (dyn Fn(&Graph) -> bool + Sync)>;

fn key(g: &Graph, v: usize) -> (usize, usize) {
    (g.degree(v), bits(g.neighbours(v)).map(|u| g.degree(u)).sum())
}

/// Canonical children of the canonical graph `parent`, in subset order.
fn children(parent: &Graph, keep: Hereditary) -> Vec<Graph> {
    let n = parent.order() + 1;
    let v = n - 1;
    let parent_code = encode_graph6(parent);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..(1u64 << v) {
        let d = s.count_ones() as usize;
        // The new vertex must have maximum degree.
        if (0..v).any(|u| parent.degree(u) + usize::from(s & bit(u) != 0) > d) {
            continue;
        }
        let mut child = parent.clone();
        child.add_vertex(s).expect("order at most the generator limit");
        let kv = key(&child, v);
        if (0..v).any(|u| key(&child, u) > kv) {
            continue;
        }
        if keep.is_some_and(|f| !f(&child)) {
            continue;
        }
        let cf = canonical_form(&child);
        let mut position = vec![0; n];
        for (i, &x) in cf.order.iter().enumerate() {
            position[x] = i;
        }
        let w = (0..n)
            .filter(|&u| key(&child, u) == kv)
            .max_by_key(|&u| position[u])
            .expect("v has the maximum key");
        if w != v && canonical_code(&child.delete_vertex(w)).as_str() != parent_code {
            continue;
        }
        let code = encode_graph6(&cf.form);
        if seen.insert(code) {
            out.push(cf.form);
        }
    }
    out
}

fn check_order(n: usize) -> Result<(), HarnessError> {
    if n > GENERATOR_MAX_ORDER {
        Err(HarnessError::OrderLimit { order: n, limit: GENERATOR_MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Graphs visited per order and the visitor's non-empty results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scan<R> {
    /// `generated[i]` is the number of graphs of order `i + 1`.
    pub generated: Vec<usize>,
    pub hits: Vec<R>,
}

/// Runs `visit` on every graph of order `1..=n_max` (canonical forms) that
/// passes `keep`, in parallel. Results come back in a fixed order that does
/// not depend on scheduling. With `stop_on_hit`, orders after the first one
/// with a result are skipped.
pub fn scan<R: Send>(
    n_max: usize,
    keep: Hereditary,
    stop_on_hit: bool,
    visit: impl Fn(&Graph) -> Option<R> + Sync,
) -> Result<Scan<R>, HarnessError> {
    check_order(n_max)?;
    let mut generated = Vec::new();
    let mut hits = Vec::new();
    let k1 = Graph::empty(1).expect("K1");
    let mut level: Vec<Graph> = if keep.is_none_or(|f| f(&k1)) { vec![k1] } else { Vec::new() };
    for order in 1..=n_max {
        if order > 1 && order == n_max {
            // Last order: stream children without storing them.
            let parts: Vec<(usize, Vec<R>)> = level
                .par_iter()
                .map(|p| {
                    let kids = children(p, keep);
                    (kids.len(), kids.iter().filter_map(&visit).collect())
                })
                .collect();
            generated.push(parts.iter().map(|(c, _)| c).sum());
            hits.extend(parts.into_iter().flat_map(|(_, h)| h));
            break;
        }
        if order > 1 {
            level = level.par_iter().flat_map_iter(|p| children(p, keep)).collect();
        }
        generated.push(level.len());
        let found: Vec<R> = level.par_iter().filter_map(&visit).collect();
        let stop = stop_on_hit && !found.is_empty();
        hits.extend(found);
        if stop {
            break;
        }
    }
    Ok(Scan { generated, hits })
}

/// All graphs on `n` vertices up to isomorphism, as canonical forms sorted by
/// canonical code.
pub fn generate_graphs(n: usize) -> Result<Vec<Graph>, HarnessError> {
    check_order(n)?;
    if n == 0 {
        return Ok(vec![Graph::empty(0).expect("empty graph")]);
    }
    let mut level = vec![Graph::empty(1).expect("K1")];
    for _ in 1..n {
        level = level.par_iter().flat_map_iter(|p| children(p, None)).collect();
    }
    level.sort_by_cached_key(encode_graph6);
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let expected = [1, 2, 4, 11, 34, 156, 1044];
        for (i, &c) in expected.iter().enumerate() {
            assert_eq!(generate_graphs(i + 1).unwrap().len(), c, "n = {}", i + 1);
        }
        assert!(generate_graphs(11).is_err());
    }

    #[test]
    fn scan_counts_and_prunes() {
        let s = scan(7, None, false, |_| Some(())).unwrap();
        assert_eq!(s.generated, vec![1, 2, 4, 11, 34, 156, 1044]);
        assert_eq!(s.hits.len(), 1252);
        let k3 = Graph::complete(3).unwrap();
        let free = |g: &Graph| crate::induced::contains_induced(g, &k3).is_none();
        let s = scan(6, Some(&free), false, |_| Some(())).unwrap();
        // Triangle-free graphs on 1..6 vertices.
        assert_eq!(s.generated, vec![1, 2, 3, 7, 14, 38]);
    }
}
