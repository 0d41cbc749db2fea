//! Twin collapse: the inverse of blowing vertices up into cliques or
//! independent sets.
//!
//! Merging runs on the canonical relabelling, always taking the
//! lexicographically smallest mergeable pair, so the resulting base is the
//! same for isomorphic inputs. A class only ever grows by one kind of twin:
//! true twins join clique classes, false twins join independent classes. Two
//! base vertices may therefore still be twins of each other when their
//! classes have different kinds (for example a clique class next to a
//! single vertex with the same open neighbourhood).

use super::{bit, bits, canonical_form, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    Single,
    Clique,
    Independent,
}

/// Original vertices merged into one base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    pub kind: ClassKind,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinCollapse {
    pub base: Graph,
    /// `classes[i]` is the class of base vertex `i`.
    pub classes: Vec<TwinClass>,
}

impl TwinCollapse {
    /// Rebuilds the input graph on its original labels.
    pub fn reconstruct(&self) -> Graph {
        let n: usize = self.classes.iter().map(|c| c.vertices.len()).sum();
        let mut g = Graph::empty(n).expect("collapse of a valid graph");
        for (i, ci) in self.classes.iter().enumerate() {
            if ci.kind == ClassKind::Clique {
                for (a, &u) in ci.vertices.iter().enumerate() {
                    for &v in &ci.vertices[a + 1..] {
                        g.add_edge(u, v);
                    }
                }
            }
            for j in bits(self.base.neighbours(i)).filter(|&j| j > i) {
                for &u in &ci.vertices {
                    for &v in &self.classes[j].vertices {
                        g.add_edge(u, v);
                    }
                }
            }
        }
        g
    }
}

pub fn twin_collapse(g: &Graph) -> TwinCollapse {
    let cf = canonical_form(g);
    let rows = cf.form.rows();
    let n = g.order();
    let mut alive = g.vertex_mask();
    let mut members: Vec<u64> = (0..n).map(bit).collect();
    let mut kinds = vec![ClassKind::Single; n];
    'merge: loop {
        for a in bits(alive) {
            for b in bits(alive & !super::low_mask(a + 1)) {
                let adjacent = rows[a] & bit(b) != 0;
                let kind = if adjacent { ClassKind::Clique } else { ClassKind::Independent };
                if !matches!(kinds[a], ClassKind::Single) && kinds[a] != kind
                    || !matches!(kinds[b], ClassKind::Single) && kinds[b] != kind
                {
                    continue;
                }
                let others = alive & !bit(a) & !bit(b);
                if rows[a] & others == rows[b] & others {
                    members[a] |= members[b];
                    kinds[a] = kind;
                    alive &= !bit(b);
                    continue 'merge;
                }
            }
        }
        break;
    }
    let base = cf.form.induced_by_mask(alive);
    let classes = bits(alive)
        .map(|a| {
            let mut vertices: Vec<usize> = bits(members[a]).map(|c| cf.order[c]).collect();
            vertices.sort_unstable();
            TwinClass { kind: kinds[a], vertices }
        })
        .collect();
    TwinCollapse { base, classes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn cliques_and_edgeless() {
        let t = twin_collapse(&Graph::complete(5).unwrap());
        assert_eq!(t.base.order(), 1);
        assert_eq!(t.classes, vec![TwinClass { kind: ClassKind::Clique, vertices: vec![0, 1, 2, 3, 4] }]);
        let t = twin_collapse(&Graph::empty(4).unwrap());
        assert_eq!(t.base.order(), 1);
        assert_eq!(t.classes[0].kind, ClassKind::Independent);
    }

    #[test]
    fn c5_with_false_twin() {
        let mut g = cycle(5);
        g.add_vertex(g.neighbours(2)).unwrap();
        let t = twin_collapse(&g);
        assert!(isomorphic(&t.base, &cycle(5)));
        let big: Vec<_> = t.classes.iter().filter(|c| c.vertices.len() > 1).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].kind, ClassKind::Independent);
        assert_eq!(big[0].vertices, vec![2, 5]);
        assert_eq!(t.reconstruct(), g);
    }

    #[test]
    fn twin_free_graphs_are_fixed() {
        let t = twin_collapse(&cycle(7));
        assert_eq!(t.base.order(), 7);
        assert!(t.classes.iter().all(|c| c.kind == ClassKind::Single));
    }

    #[test]
    fn mixed_kinds_stay_apart() {
        // P3 whose first end is blown up into an edge: ends are false twins
        // in the base but one of them is a clique class.
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let t = twin_collapse(&g);
        assert_eq!(t.base.order(), 3);
        assert_eq!(t.reconstruct(), g);
    }

    #[test]
    fn reconstruct_round_trips_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let t = twin_collapse(&g);
            assert_eq!(t.reconstruct(), g);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.reverse();
            let t2 = twin_collapse(&g.permuted(&perm));
            assert_eq!(t.base, t2.base);
        }
    }
}
