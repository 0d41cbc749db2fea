//! Blue/red classification around an induced C5 in {2K1+K2, gem}-free graphs.

use super::{pattern, require_free, Precondition, StructureError};
use crate::graph::{bit, twin_collapse, Graph, TwinCollapse};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum L4Tag {
    OnCycle,
    /// N(u) ∩ C induces P3.
    Blue,
    /// N(u) ∩ C induces K2 or K1+K2.
    Red,
}

impl L4Tag {
    pub fn name(self) -> &'static str {
        match self {
            L4Tag::OnCycle => "on_cycle",
            L4Tag::Blue => "blue",
            L4Tag::Red => "red",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L4Decomposition {
    /// The cycle C in cyclic order, starting at its smallest vertex and
    /// continuing to its smaller neighbour.
    pub c5: [usize; 5],
    pub tags: Vec<L4Tag>,
    pub collapse: TwinCollapse,
    pub base: Graph,
}

impl L4Decomposition {
    /// `vertex: tag` lines, then the cycle and the base.
    pub fn certificate(&self) -> String {
        let mut out = super::certificate_lines(self.tags.iter().map(|t| t.name()));
        let c: Vec<String> = self.c5.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("cycle: {}\n", c.join(" ")));
        out.push_str(&format!("base: {}\n", crate::graph::encode_graph6(&self.base)));
        out
    }
}

/// The lexicographically least 5-subset inducing C5, in cyclic order.
pub(crate) fn least_c5(g: &Graph) -> Option<[usize; 5]> {
    let n = g.order();
    let rows = g.rows();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    for e in (d + 1)..n {
                        let s = bit(a) | bit(b) | bit(c) | bit(d) | bit(e);
                        // Five vertices, each with two neighbours inside: C5.
                        if [a, b, c, d, e].iter().all(|&v| (rows[v] & s).count_ones() == 2) {
                            return Some(cyclic_order(rows, s, a));
                        }
                    }
                }
            }
        }
    }
    None
}

fn cyclic_order(rows: &[u64], s: u64, start: usize) -> [usize; 5] {
    let mut out = [start; 5];
    let mut prev = start;
    let mut cur = (rows[start] & s).trailing_zeros() as usize;
    out[1] = cur;
    for slot in out.iter_mut().skip(2) {
        let next = (rows[cur] & s & !bit(prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
        *slot = cur;
    }
    out
}

pub fn l4_classify(g: &Graph) -> Result<L4Decomposition, StructureError> {
    require_free(g, &[pattern("2K1+K2"), pattern("co(K1+P4)")])?;
    let c5 = least_c5(g).ok_or(StructureError::Precondition(Precondition::MissingC5))?;
    let cycle = c5.iter().fold(0u64, |acc, &v| acc | bit(v));
    let rows = g.rows();
    let mut tags = Vec::with_capacity(g.order());
    for u in 0..g.order() {
        if cycle & bit(u) != 0 {
            tags.push(L4Tag::OnCycle);
            continue;
        }
        let s = rows[u] & cycle;
        let edges: u32 = crate::graph::bits(s).map(|v| (rows[v] & s).count_ones()).sum::<u32>() / 2;
        let tag = match (s.count_ones(), edges) {
            (3, 2) => L4Tag::Blue,
            (2, 1) | (3, 1) => L4Tag::Red,
            _ => {
                return Err(StructureError::Claim(format!(
                    "vertex {u} has {} neighbours on the cycle inducing {edges} edges",
                    s.count_ones()
                )))
            }
        };
        tags.push(tag);
    }
    let collapse = twin_collapse(g);
    let base = collapse.base.clone();
    Ok(L4Decomposition { c5, tags, collapse, base })
}
