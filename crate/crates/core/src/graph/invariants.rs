//! Exact clique number, independence number and chromatic number.
//!
//! Clique search is a colour-bounded branch and bound over bitsets. The
//! chromatic number comes from a DSATUR branch and bound seeded with the exact
//! clique number as lower bound. Both are exponential in the worst case; the
//! chromatic search is practical up to roughly 32 vertices on general graphs
//! and much further on graphs whose clique bound is tight.

use super::{bit, bits, low_mask, Graph, MAX_ORDER};

/// The three classical invariants of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invariants {
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
}

pub fn invariants(g: &Graph) -> Invariants {
    Invariants {
        alpha: independence_number(g),
        omega: clique_number(g),
        chi: chromatic_number(g),
    }
}

pub fn clique_number(g: &Graph) -> usize {
    clique_size_in(g.rows(), g.vertex_mask())
}

pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// The lexicographically smallest maximum clique of `g`, as a vertex mask.
pub fn max_clique(g: &Graph) -> u64 {
    max_clique_in(g, g.vertex_mask())
}

pub fn max_independent_set(g: &Graph) -> u64 {
    max_clique(&g.complement())
}

/// The lexicographically smallest maximum clique among the vertices of `within`.
pub fn max_clique_in(g: &Graph, within: u64) -> u64 {
    let rows = g.rows();
    let within = within & g.vertex_mask();
    let mut need = clique_size_in(rows, within);
    let mut chosen = 0u64;
    let mut cand = within;
    for v in bits(within) {
        if need == 0 {
            break;
        }
        if cand & bit(v) == 0 {
            continue;
        }
        if clique_size_in(rows, cand & rows[v]) + 1 >= need {
            chosen |= bit(v);
            cand &= rows[v];
            need -= 1;
        } else {
            cand &= !bit(v);
        }
    }
    chosen
}

pub(crate) fn clique_size_in(rows: &[u64], within: u64) -> usize {
    if within == 0 {
        return 0;
    }
    let mut best = 0usize;
    expand(rows, 0, within, &mut best);
    best
}

/// Greedy colour classes of `cand`; returns vertices ordered by colour and
/// the colour (1-based) of each.
fn colour_sort(rows: &[u64], cand: u64, order: &mut [usize; MAX_ORDER], colours: &mut [usize; MAX_ORDER]) -> usize {
    let mut uncoloured = cand;
    let mut len = 0;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !rows[v] & !bit(v);
            uncoloured &= !bit(v);
            order[len] = v;
            colours[len] = colour;
            len += 1;
        }
    }
    len
}

fn expand(rows: &[u64], size: usize, mut cand: u64, best: &mut usize) {
    let mut order = [0usize; MAX_ORDER];
    let mut colours = [0usize; MAX_ORDER];
    let len = colour_sort(rows, cand, &mut order, &mut colours);
    for idx in (0..len).rev() {
        if size + colours[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = cand & rows[v];
        if next == 0 {
            if size + 1 > *best {
                *best = size + 1;
            }
        } else {
            expand(rows, size + 1, next, best);
        }
        cand &= !bit(v);
    }
}

pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_colouring(g).0
}

/// Exact chromatic number with an optimal colouring (colours `0..chi`).
pub fn chromatic_colouring(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (0, Vec::new());
    }
    let lower = clique_number(g);
    let mut search = ColourSearch {
        rows: g.rows(),
        n,
        lower,
        best: n + 1,
        best_colouring: Vec::new(),
    };
    let state = ColourState {
        colour: [u8::MAX; MAX_ORDER],
        forbidden: [0u64; MAX_ORDER],
        uncoloured: g.vertex_mask(),
    };
    search.run(&state, 0);
    let colouring = search.best_colouring[..n].iter().map(|&c| c as usize).collect();
    (search.best, colouring)
}

struct ColourSearch<'a> {
    rows: &'a [u64],
    n: usize,
    lower: usize,
    best: usize,
    best_colouring: Vec<u8>,
}

#[derive(Clone)]
struct ColourState {
    colour: [u8; MAX_ORDER],
    // Colours already used by coloured neighbours of each vertex.
    forbidden: [u64; MAX_ORDER],
    uncoloured: u64,
}

impl ColourSearch<'_> {
    fn run(&mut self, state: &ColourState, used: usize) {
        if state.uncoloured == 0 {
            if used < self.best {
                self.best = used;
                self.best_colouring = state.colour[..self.n].to_vec();
            }
            return;
        }
        let v = self.pick(state);
        // Colours 0..used are reusable; `used` opens a new one.
        let limit = (used + 1).min(self.best - 1);
        let avail = !state.forbidden[v] & low_mask(limit);
        for c in bits(avail) {
            if used.max(c + 1) >= self.best {
                break;
            }
            let mut next = state.clone();
            next.colour[v] = c as u8;
            next.uncoloured &= !bit(v);
            for u in bits(self.rows[v] & next.uncoloured) {
                next.forbidden[u] |= bit(c);
            }
            self.run(&next, used.max(c + 1));
            if self.best <= self.lower {
                return;
            }
        }
    }

    /// DSATUR choice: most distinct neighbour colours, then most uncoloured neighbours.
    fn pick(&self, state: &ColourState) -> usize {
        let mut best_v = usize::MAX;
        let mut best_key = (0u32, 0u32);
        for v in bits(state.uncoloured) {
            let key = (
                state.forbidden[v].count_ones(),
                (self.rows[v] & state.uncoloured).count_ones(),
            );
            if best_v == usize::MAX || key > best_key {
                best_v = v;
                best_key = key;
            }
        }
        best_v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn brute_chi(g: &Graph) -> usize {
        let n = g.order();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut colour = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| colour[u] != colour[v]) {
                    return k;
                }
                let mut i = 0;
                while i < n {
                    colour[i] += 1;
                    if colour[i] < k {
                        break;
                    }
                    colour[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        n
    }

    #[test]
    fn odd_cycles_and_complements() {
        assert_eq!(invariants(&cycle(5)), Invariants { alpha: 2, omega: 2, chi: 3 });
        assert_eq!(invariants(&cycle(7)), Invariants { alpha: 3, omega: 2, chi: 3 });
        let co_c7 = cycle(7).complement();
        assert_eq!(brute_chi(&co_c7), 4);
        assert_eq!(invariants(&co_c7), Invariants { alpha: 2, omega: 3, chi: 4 });
        assert_eq!(invariants(&Graph::empty(0).unwrap()), Invariants { alpha: 0, omega: 0, chi: 0 });
    }

    #[test]
    fn colouring_is_proper() {
        let g = cycle(9).complement();
        let (chi, colours) = chromatic_colouring(&g);
        assert_eq!(chi, 5);
        for (u, v) in g.edges() {
            assert_ne!(colours[u], colours[v]);
        }
        assert!(colours.iter().all(|&c| c < chi));
    }

    #[test]
    fn lexicographic_max_clique() {
        // Two triangles {0,1,2} and {1,3,4}; both maximum.
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (1, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(max_clique(&g), 0b00111);
        assert_eq!(max_clique_in(&g, 0b11010), 0b11010);
        assert_eq!(max_independent_set(&cycle(6)), 0b010101);
    }

    #[test]
    fn random_graphs_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            assert_eq!(chromatic_number(&g), brute_chi(&g), "{g:?}");
            let omega = clique_number(&g);
            let clique = max_clique(&g);
            assert_eq!(clique.count_ones() as usize, omega);
            for v in bits(clique) {
                assert_eq!(g.neighbours(v) & clique, clique & !bit(v));
            }
        }
    }
}
