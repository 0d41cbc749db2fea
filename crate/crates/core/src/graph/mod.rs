//! Small simple graphs on at most 64 vertices, stored as one adjacency
//! bitmask per vertex.

mod canon;
mod graph6;
mod invariants;
mod twins;

use std::fmt;

use thiserror::Error;

pub use canon::{canonical_code, canonical_form, isomorphic, CanonicalCode, CanonicalForm};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use invariants::{
    chromatic_colouring, chromatic_number, clique_number, independence_number, invariants,
    max_clique, max_clique_in, max_independent_set, Invariants,
};
pub use twins::{twin_collapse, ClassKind, TwinClass, TwinCollapse};

/// Hard cap on the number of vertices.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} exceeds the limit of {MAX_ORDER} vertices")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(usize),
}

/// Iterates the indices of the set bits of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A labelled simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        Ok(Self { n, rows: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let stray = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: stray, order: n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(GraphError::NotSymmetric(v, u));
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Self::from_rows(rows.clone()).is_ok());
        Self { n: rows.len(), rows }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Ok(Self::empty(n)?.complement())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Bitmask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Adds the edge `uv`. Panics on a self-loop or out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "invalid edge ({u}, {v})");
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "invalid edge ({u}, {v})");
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    /// Appends a new vertex adjacent to exactly `neighbours`.
    pub fn add_vertex(&mut self, neighbours: u64) -> Result<usize, GraphError> {
        if self.n >= MAX_ORDER {
            return Err(GraphError::OrderTooLarge(self.n + 1));
        }
        let v = self.n;
        let neighbours = neighbours & low_mask(v);
        for u in bits(neighbours) {
            self.rows[u] |= bit(v);
        }
        self.rows.push(neighbours);
        self.n += 1;
        Ok(v)
    }

    /// The complement: off-diagonal adjacency negated.
    pub fn complement(&self) -> Self {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        Self { n: self.n, rows }
    }

    /// Vertex-disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Self { n, rows })
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self, GraphError> {
        let mut seen = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            if seen & bit(v) != 0 {
                return Err(GraphError::DuplicateVertex(v));
            }
            seen |= bit(v);
        }
        Ok(self.induced_ordered(vertices))
    }

    pub(crate) fn induced_ordered(&self, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let mut rows = vec![0u64; k];
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    rows[i] |= bit(j);
                    rows[j] |= bit(i);
                }
            }
        }
        Self { n: k, rows }
    }

    /// The subgraph induced by the vertices in `mask`, in ascending order.
    pub fn induced_by_mask(&self, mask: u64) -> Self {
        let mask = mask & self.vertex_mask();
        if mask == self.vertex_mask() {
            return self.clone();
        }
        let vertices: Vec<usize> = bits(mask).collect();
        self.induced_ordered(&vertices)
    }

    /// Removes vertex `v`, shifting higher labels down by one.
    pub fn delete_vertex(&self, v: usize) -> Self {
        self.induced_by_mask(self.vertex_mask() & !bit(v))
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        debug_assert_eq!(order.len(), self.n);
        let mut inverse = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            inverse[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| bits(self.rows[v]).fold(0u64, |acc, u| acc | bit(inverse[u])))
            .collect();
        Self { n: self.n, rows }
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = self.vertex_mask();
        while left != 0 {
            let comp = self.reach(left & left.wrapping_neg(), left);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True for graphs with at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(1, self.vertex_mask()) == self.vertex_mask()
    }

    /// Proper two-colouring of the vertices, as the mask of one side, if any.
    pub fn bipartition(&self) -> Option<u64> {
        let mut side = 0u64;
        let mut coloured = 0u64;
        for comp in self.components() {
            let mut layer = comp & comp.wrapping_neg();
            let mut parity = true;
            coloured |= layer;
            while layer != 0 {
                if parity {
                    side |= layer;
                }
                let mut next = 0u64;
                for v in bits(layer) {
                    next |= self.rows[v];
                }
                if next & layer != 0 {
                    return None;
                }
                next &= !coloured;
                coloured |= next;
                layer = next;
                parity = !parity;
            }
        }
        // Edges inside a side would have been caught only within a layer; check fully.
        for v in bits(side) {
            if self.rows[v] & side != 0 {
                return None;
            }
        }
        let other = self.vertex_mask() & !side;
        for v in bits(other) {
            if self.rows[v] & other != 0 {
                return None;
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Parts of a complete multipartite graph, or `None` if the graph is not one.
    ///
    /// A graph is complete multipartite when non-adjacency is an equivalence
    /// relation, i.e. its complement is a disjoint union of at least one clique.
    pub fn multipartite_parts(&self) -> Option<Vec<u64>> {
        if self.n == 0 {
            return None;
        }
        let all = self.vertex_mask();
        let mut parts = Vec::new();
        let mut left = all;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let part = all & !self.rows[v];
            for u in bits(part) {
                if all & !self.rows[u] != part {
                    return None;
                }
            }
            parts.push(part);
            left &= !part;
        }
        Some(parts)
    }

    pub fn shape_report(&self) -> ShapeReport {
        let connected = self.is_connected();
        let max_deg = self.max_degree();
        let all_deg_two = self.n > 0 && (0..self.n).all(|v| self.degree(v) == 2);
        let is_cycle = connected && self.n >= 3 && all_deg_two;
        ShapeReport {
            connected,
            bipartite: self.is_bipartite(),
            complete_multipartite: self.multipartite_parts().is_some(),
            is_path: connected && max_deg <= 2 && self.edge_count() + 1 == self.n,
            is_cycle,
            is_odd_cycle: is_cycle && self.n % 2 == 1,
            is_c5: is_cycle && self.n == 5,
        }
    }
}

/// Exact shape predicates used by the class filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeReport {
    pub connected: bool,
    pub bipartite: bool,
    pub complete_multipartite: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_odd_cycle: bool,
    pub is_c5: bool,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(GraphError::OrderTooLarge(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, Graph::complete(3).unwrap());
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.edge_count(), 0);
    }

    #[test]
    fn from_rows_validates() {
        assert_eq!(Graph::from_rows(vec![0b10, 0]), Err(GraphError::NotSymmetric(0, 1)));
        assert_eq!(Graph::from_rows(vec![0b1]), Err(GraphError::SelfLoop(0)));
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn complement_and_union() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.complement(), Graph::empty(3).unwrap());
        let c5 = cycle(5);
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement().edge_count(), 5);

        let k1 = Graph::empty(1).unwrap();
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let u = k1.disjoint_union(&p3).unwrap();
        assert_eq!((u.order(), u.edge_count()), (4, 2));
        assert!(u.has_edge(1, 2) && u.has_edge(2, 3) && u.degree(0) == 0);

        let k2 = Graph::complete(2).unwrap();
        let two_k2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!(two_k2.edges(), vec![(0, 1), (2, 3)]);
        let three_k1 = k1.disjoint_union(&k1).unwrap().disjoint_union(&k1).unwrap();
        assert_eq!(three_k1, Graph::empty(3).unwrap());

        let big = Graph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(GraphError::OrderTooLarge(80)));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5);
        let p4 = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(c5.induced_subgraph(&[0, 2]).unwrap(), Graph::empty(2).unwrap());
        assert!(c5.induced_subgraph(&[0, 5]).is_err());
        assert_eq!(c5.induced_subgraph(&[1, 1]), Err(GraphError::DuplicateVertex(1)));
    }

    #[test]
    fn shapes() {
        let c5 = cycle(5).shape_report();
        assert!(c5.connected && !c5.bipartite && !c5.complete_multipartite);
        assert!(c5.is_cycle && c5.is_odd_cycle && c5.is_c5 && !c5.is_path);

        let mut k23 = Graph::empty(5).unwrap();
        for a in 0..2 {
            for b in 2..5 {
                k23.add_edge(a, b);
            }
        }
        let r = k23.shape_report();
        assert!(r.connected && r.bipartite && r.complete_multipartite && !r.is_cycle);

        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap().shape_report();
        assert!(!two_k2.connected && two_k2.bipartite && !two_k2.complete_multipartite);

        // kK1 is a single part.
        assert!(Graph::empty(4).unwrap().shape_report().complete_multipartite);
        assert!(!Graph::empty(0).unwrap().shape_report().complete_multipartite);

        for n in 3..12 {
            let r = cycle(n).shape_report();
            assert_eq!(r.is_odd_cycle, n % 2 == 1);
            assert!(r.is_cycle);
        }
        let p1 = Graph::empty(1).unwrap().shape_report();
        assert!(p1.is_path && p1.connected);
    }

    #[test]
    fn components_and_bits() {
        let g = Graph::new(6, &[(0, 3), (3, 5), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![0b101001, 0b000110, 0b010000]);
        assert_eq!(bits(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(low_mask(64), u64::MAX);
    }
}
