//! Perfectness, by odd holes and antiholes or directly from the definition,
//! and ω-colourability.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{bit, bits, canonical_code, chromatic_number, clique_number, CanonicalCode, Graph};

/// Largest order accepted by the hole search.
pub const HOLE_MAX_ORDER: usize = 32;
/// Largest order accepted by the subset-by-subset definition check.
pub const DEFINITION_MAX_ORDER: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph on {order} vertices exceeds the limit of {limit} for this check")]
pub struct TooLarge {
    pub order: usize,
    pub limit: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImperfectionWitness {
    /// Chordless odd cycle of length at least 5, in cyclic order.
    OddHole(Vec<usize>),
    /// Vertices inducing an odd hole in the complement, in cyclic order there.
    OddAntihole(Vec<usize>),
    /// Induced subgraph whose chromatic number exceeds its clique number.
    ChiAboveOmega { vertices: Vec<usize>, chi: usize, omega: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectnessCertificate {
    pub perfect: bool,
    pub witness: Option<ImperfectionWitness>,
}

impl PerfectnessCertificate {
    fn perfect() -> Self {
        Self { perfect: true, witness: None }
    }

    fn imperfect(witness: ImperfectionWitness) -> Self {
        Self { perfect: false, witness: Some(witness) }
    }

    /// Checks the witness against `g`. A perfect verdict carries no witness
    /// and is accepted as is.
    pub fn validate(&self, g: &Graph) -> bool {
        match (&self.perfect, &self.witness) {
            (true, None) => true,
            (false, Some(ImperfectionWitness::OddHole(cycle))) => is_odd_hole(g, cycle),
            (false, Some(ImperfectionWitness::OddAntihole(cycle))) => is_odd_hole(&g.complement(), cycle),
            (false, Some(ImperfectionWitness::ChiAboveOmega { vertices, chi, omega })) => {
                let Ok(h) = g.induced_subgraph(vertices) else {
                    return false;
                };
                chromatic_number(&h) == *chi && clique_number(&h) == *omega && chi > omega
            }
            _ => false,
        }
    }
}

/// Whether `cycle` lists the vertices of an induced odd cycle of length >= 5
/// in cyclic order.
pub fn is_odd_hole(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 5 || len.is_multiple_of(2) || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let mask = cycle.iter().fold(0u64, |acc, &v| acc | bit(v));
    if mask.count_ones() as usize != len {
        return false;
    }
    (0..len).all(|i| {
        let expected = bit(cycle[(i + 1) % len]) | bit(cycle[(i + len - 1) % len]);
        g.neighbours(cycle[i]) & mask == expected
    })
}

/// An odd hole of `g`, listed in cyclic order from its smallest vertex.
pub fn odd_hole(g: &Graph) -> Result<Option<Vec<usize>>, TooLarge> {
    if g.order() > HOLE_MAX_ORDER {
        return Err(TooLarge { order: g.order(), limit: HOLE_MAX_ORDER });
    }
    let rows = g.rows();
    for s in 0..g.order() {
        let above = !crate::graph::low_mask(s + 1);
        let mut path = vec![s];
        for a in bits(rows[s] & above) {
            path.push(a);
            if hole_from(rows, &mut path, above, 0) {
                return Ok(Some(path));
            }
            path.pop();
        }
    }
    Ok(None)
}

/// Extends the chordless path `path` (first vertex `s`, all others in
/// `above`). `blocked` holds the neighbours of the interior vertices.
fn hole_from(rows: &[u64], path: &mut Vec<usize>, above: u64, blocked: u64) -> bool {
    let s = path[0];
    let last = *path.last().expect("nonempty path");
    let on_path = path.iter().fold(0u64, |acc, &v| acc | bit(v));
    let cand = rows[last] & above & !on_path & !blocked;
    for w in bits(cand) {
        if rows[s] & bit(w) != 0 {
            let len = path.len() + 1;
            if len >= 5 && len % 2 == 1 {
                path.push(w);
                return true;
            }
            continue;
        }
        path.push(w);
        if hole_from(rows, path, above, blocked | rows[last]) {
            return true;
        }
        path.pop();
    }
    false
}

/// Perfectness through odd holes and odd antiholes.
pub fn is_perfect_spgt(g: &Graph) -> Result<PerfectnessCertificate, TooLarge> {
    if let Some(hole) = odd_hole(g)? {
        return Ok(PerfectnessCertificate::imperfect(ImperfectionWitness::OddHole(hole)));
    }
    if let Some(hole) = odd_hole(&g.complement())? {
        return Ok(PerfectnessCertificate::imperfect(ImperfectionWitness::OddAntihole(hole)));
    }
    Ok(PerfectnessCertificate::perfect())
}

/// Default perfectness test.
pub fn is_perfect(g: &Graph) -> Result<PerfectnessCertificate, TooLarge> {
    is_perfect_spgt(g)
}

/// Perfectness by checking χ = ω on every induced subgraph, smallest
/// subgraphs first, so a witness is a minimal imperfect induced subgraph.
pub fn is_perfect_definition(g: &Graph) -> Result<PerfectnessCertificate, TooLarge> {
    definition_check(g, |h| chromatic_number(h) == clique_number(h))
}

/// Definition oracle with a bounded memo of per-isomorphism-class results.
/// Answers are identical to [`is_perfect_definition`].
#[derive(Debug, Default)]
pub struct DefinitionOracle {
    cache: HashMap<CanonicalCode, bool>,
    capacity: usize,
}

impl DefinitionOracle {
    pub fn with_capacity(capacity: usize) -> Self {
        Self { cache: HashMap::new(), capacity }
    }

    pub fn check(&mut self, g: &Graph) -> Result<PerfectnessCertificate, TooLarge> {
        let cache = &mut self.cache;
        let capacity = self.capacity;
        definition_check(g, |h| {
            let code = canonical_code(h);
            if let Some(&ok) = cache.get(&code) {
                return ok;
            }
            let ok = chromatic_number(h) == clique_number(h);
            if cache.len() >= capacity {
                cache.clear();
            }
            cache.insert(code, ok);
            ok
        })
    }
}

fn definition_check(
    g: &Graph,
    mut balanced: impl FnMut(&Graph) -> bool,
) -> Result<PerfectnessCertificate, TooLarge> {
    let n = g.order();
    if n > DEFINITION_MAX_ORDER {
        return Err(TooLarge { order: n, limit: DEFINITION_MAX_ORDER });
    }
    for size in 1..=n {
        for subset in subsets_of_size(n, size) {
            let h = g.induced_by_mask(subset);
            if !balanced(&h) {
                return Ok(PerfectnessCertificate::imperfect(ImperfectionWitness::ChiAboveOmega {
                    vertices: bits(subset).collect(),
                    chi: chromatic_number(&h),
                    omega: clique_number(&h),
                }));
            }
        }
    }
    Ok(PerfectnessCertificate::perfect())
}

/// All `size`-subsets of `0..n` in increasing numeric order (Gosper's hack).
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut next = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut done = size > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let current = next;
        if current == 0 {
            done = true;
            return Some(0);
        }
        let c = current & current.wrapping_neg();
        let r = current + c;
        next = (((r ^ current) >> 2) / c) | r;
        if next >= limit {
            done = true;
        }
        Some(current)
    })
}

pub fn is_omega_colourable(g: &Graph) -> bool {
    chromatic_number(g) == clique_number(g)
}
