//! ω-colouring of {kK1+K2, co(lK1+K2)}-free graphs with a large clique, by
//! peeling maximum cliques and extending the colouring layer by layer
//! through bipartite matchings.

use super::{pattern, require_free, Precondition, StructureError};
use crate::expr::catalog;
use crate::graph::{bit, bits, clique_number, max_clique_in, Graph};
use crate::induced::contains_induced;
use crate::ramsey::{threshold, Threshold};

/// Colours `1..=c`, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub colours: Vec<usize>,
}

impl Colouring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.order()
            && self.colours.iter().all(|&c| c >= 1)
            && g.edges().iter().all(|&(u, v)| self.colours[u] != self.colours[v])
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        let mut seen: Vec<usize> = self.colours.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn certificate(&self) -> String {
        super::certificate_lines(&self.colours)
    }
}

/// Maximum cliques removed one after another until the rest is K_m-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePeel {
    /// Each layer sorted ascending.
    pub layers: Vec<Vec<usize>>,
    pub remainder: u64,
    pub m: usize,
}

/// Peels lexicographically smallest maximum cliques while the remaining
/// graph contains K_m.
pub fn clique_peel(g: &Graph, m: usize) -> CliquePeel {
    let km = catalog::complete(m).expect("m is at most 64");
    let mut remainder = g.vertex_mask();
    let mut layers = Vec::new();
    while contains_induced(&g.induced_by_mask(remainder), &km).is_some() {
        let layer = max_clique_in(g, remainder);
        layers.push(bits(layer).collect());
        remainder &= !layer;
    }
    CliquePeel { layers, remainder, m }
}

/// Maximum matching by augmenting paths, trying left vertices in order and
/// their edges in the order given. Returns `matching[left] = right` when
/// every left vertex is covered.
pub fn bipartite_matching(left: usize, right: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj = vec![Vec::new(); left];
    for &(l, r) in edges {
        if l < left && r < right {
            adj[l].push(r);
        }
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for l in 0..left {
        let mut seen = vec![false; right];
        if !augment(l, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut matching = vec![0; left];
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = *o {
            matching[l] = r;
        }
    }
    Some(matching)
}

fn augment(l: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    // A free partner first, then augmenting paths.
    if let Some(&r) = adj[l].iter().find(|&&r| !seen[r] && owner[r].is_none()) {
        owner[r] = Some(l);
        return true;
    }
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        if owner[r].is_none() || augment(owner[r].expect("checked"), adj, owner, seen) {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

/// Colours `g` with exactly ω(g) colours. Requires `k >= 3`, `l >= 2`,
/// freeness of kK1+K2 and co(lK1+K2), and ω(g) at least the l5_omega
/// threshold; all are checked.
pub fn l5_colour(g: &Graph, k: usize, l: usize) -> Result<Colouring, StructureError> {
    if k < 3 || l < 2 {
        return Err(StructureError::Precondition(Precondition::Parameters(format!(
            "need k >= 3 and l >= 2, got k = {k}, l = {l}"
        ))));
    }
    require_free(g, &[pattern(&format!("{k}K1+K2")), pattern(&format!("co({l}K1+K2)"))])?;
    let omega = clique_number(g);
    let needed = threshold(Threshold::L5Omega, &[k as u64, l as u64]).expect("valid parameters").value;
    if (omega as u128) < needed {
        return Err(StructureError::Precondition(Precondition::CliqueTooSmall { omega, needed }));
    }

    let m = k * (l - 1);
    let peel = clique_peel(g, m);
    if peel.layers.len() > k {
        return Err(StructureError::Claim(format!("peeled {} cliques, more than k = {k}", peel.layers.len())));
    }
    let mut colours = vec![0usize; g.order()];
    for (c, &v) in peel.layers[0].iter().enumerate() {
        colours[v] = c + 1;
    }
    for (i, layer) in peel.layers.iter().enumerate().skip(1) {
        let mut edges = Vec::new();
        for (a, &v) in layer.iter().enumerate() {
            let forbidden = used_by_neighbours(g, &colours, v);
            edges.extend((1..=omega).filter(|c| !forbidden.contains(c)).map(|c| (a, c - 1)));
        }
        let matching =
            bipartite_matching(layer.len(), omega, &edges).ok_or(StructureError::HallFailure { layer: i + 1 })?;
        for (a, &v) in layer.iter().enumerate() {
            colours[v] = matching[a] + 1;
        }
    }
    for v in degeneracy_order(g, peel.remainder).into_iter().rev() {
        let forbidden = used_by_neighbours(g, &colours, v);
        let c = (1..=omega).find(|c| !forbidden.contains(c)).ok_or_else(|| {
            StructureError::Claim(format!("remainder vertex {v} sees all {omega} colours"))
        })?;
        colours[v] = c;
    }
    Ok(Colouring { colours })
}

fn used_by_neighbours(g: &Graph, colours: &[usize], v: usize) -> Vec<usize> {
    bits(g.neighbours(v)).map(|u| colours[u]).filter(|&c| c > 0).collect()
}

/// Vertices of `within` removed smallest degree first (ties by label).
fn degeneracy_order(g: &Graph, within: u64) -> Vec<usize> {
    let mut left = within;
    let mut order = Vec::with_capacity(within.count_ones() as usize);
    while left != 0 {
        let v = bits(left)
            .min_by_key(|&v| (g.neighbours(v) & left).count_ones())
            .expect("nonempty");
        order.push(v);
        left &= !bit(v);
    }
    order
}
