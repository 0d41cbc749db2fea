//! Structural decompositions and constructive algorithms: the Olariu split
//! of paw-free components, shape classification for claw-plus-vertex-free
//! triangle-free graphs, the C5 blue/red classification with blow-ups, and
//! the clique-peeling ω-colouring.

mod colour;
mod l4;

use std::fmt;

use thiserror::Error;

use crate::expr::{build, catalog};
use crate::graph::{bits, independence_number, Graph, MAX_ORDER};
use crate::induced::{contains_induced, find_violation, Embedding};

pub use colour::{bipartite_matching, clique_peel, l5_colour, CliquePeel, Colouring};
pub use l4::{l4_classify, L4Decomposition, L4Tag};

/// An input that does not meet an operation's documented preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    /// The graph contains a forbidden induced subgraph.
    Contains { pattern: String, embedding: Embedding },
    Disconnected,
    /// No induced C5.
    MissingC5,
    Parameters(String),
    CliqueTooSmall { omega: usize, needed: u128 },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::Contains { pattern, embedding } => {
                write!(f, "contains induced {pattern} at vertices")?;
                for v in &embedding.0 {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Precondition::Disconnected => f.write_str("graph is not connected"),
            Precondition::MissingC5 => f.write_str("graph has no induced C5"),
            Precondition::Parameters(reason) => f.write_str(reason),
            Precondition::CliqueTooSmall { omega, needed } => {
                write!(f, "clique number {omega} is below the required {needed}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("precondition failed: {0}")]
    Precondition(Precondition),
    #[error("blow-up would have {0} vertices (limit {MAX_ORDER})")]
    SizeOverflow(usize),
    #[error("blow-up spec has {found} entries for {expected} vertices, or a zero size")]
    BadSpec { expected: usize, found: usize },
    /// The availability graph of a clique layer has no matching covering the
    /// layer. Under the preconditions this cannot happen.
    #[error("no colour matching for clique layer {layer}")]
    HallFailure { layer: usize },
    /// A structural claim that the preconditions guarantee did not hold.
    #[error("structural claim failed: {0}")]
    Claim(String),
}

/// Returns the first listed pattern `g` contains, as a precondition error.
pub(crate) fn require_free(g: &Graph, patterns: &[(&str, Graph)]) -> Result<(), StructureError> {
    let graphs: Vec<Graph> = patterns.iter().map(|(_, p)| p.clone()).collect();
    match find_violation(g, &graphs) {
        Some(v) => Err(StructureError::Precondition(Precondition::Contains {
            pattern: patterns[v.pattern].0.to_string(),
            embedding: v.embedding,
        })),
        None => Ok(()),
    }
}

pub(crate) fn pattern(text: &str) -> (&str, Graph) {
    (text, build(text).expect("built-in pattern"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OlariuTag {
    TriangleFree,
    CompleteMultipartite,
    /// An induced Z1 inside the component, on the vertices of `g`.
    Violation(Embedding),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: u64,
    pub tag: OlariuTag,
}

/// Components in order of their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OlariuReport {
    pub components: Vec<ComponentReport>,
}

pub fn olariu_decompose(g: &Graph) -> OlariuReport {
    let z1 = catalog::paw();
    let components = g
        .components()
        .into_iter()
        .map(|c| {
            let h = g.induced_by_mask(c);
            let tag = if h.multipartite_parts().is_some() {
                OlariuTag::CompleteMultipartite
            } else if contains_induced(&h, &Graph::complete(3).expect("K3")).is_none() {
                OlariuTag::TriangleFree
            } else {
                // A connected graph with a triangle that is not complete
                // multipartite always contains Z1.
                let labels: Vec<usize> = bits(c).collect();
                let e = contains_induced(&h, &z1).expect("connected non-multipartite graph with a triangle has Z1");
                OlariuTag::Violation(Embedding(e.0.iter().map(|&i| labels[i]).collect()))
            };
            ComponentReport { vertices: c, tag }
        })
        .collect();
    OlariuReport { components }
}

/// Components with a complete multipartite tag (`m`) and all others (`n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnSplit {
    pub m: Vec<u64>,
    pub n: Vec<u64>,
}

pub fn mn_split(g: &Graph) -> MnSplit {
    let (m, n) = olariu_decompose(g)
        .components
        .into_iter()
        .partition::<Vec<_>, _>(|c| c.tag == OlariuTag::CompleteMultipartite);
    MnSplit { m: m.into_iter().map(|c| c.vertices).collect(), n: n.into_iter().map(|c| c.vertices).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Indep5Shape {
    Path,
    Cycle,
    CompleteBipartite,
    /// Independence number below 5.
    NotApplicable,
}

impl Indep5Shape {
    pub fn name(self) -> &'static str {
        match self {
            Indep5Shape::Path => "path",
            Indep5Shape::Cycle => "cycle",
            Indep5Shape::CompleteBipartite => "complete_bipartite",
            Indep5Shape::NotApplicable => "not_applicable",
        }
    }
}

/// Shape of a connected {K1+K1,3, K3}-free graph with independence number
/// at least 5.
pub fn indep5_classify(g: &Graph) -> Result<Indep5Shape, StructureError> {
    if g.order() == 0 || !g.is_connected() {
        return Err(StructureError::Precondition(Precondition::Disconnected));
    }
    require_free(g, &[pattern("K1+K1,3"), pattern("K3")])?;
    if independence_number(g) < 5 {
        return Ok(Indep5Shape::NotApplicable);
    }
    let shape = g.shape_report();
    if shape.is_path {
        Ok(Indep5Shape::Path)
    } else if shape.is_cycle {
        Ok(Indep5Shape::Cycle)
    } else if shape.bipartite && shape.complete_multipartite {
        Ok(Indep5Shape::CompleteBipartite)
    } else {
        Err(StructureError::Claim("independence at least 5 but not a path, cycle or complete bipartite graph".into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlowKind {
    /// Copies are pairwise non-adjacent (false twins).
    Independent,
    /// Copies are pairwise adjacent (true twins).
    Clique,
}

/// Replaces vertex `v` of `base` by `spec[v].1 >= 1` twins of kind
/// `spec[v].0`. Base vertices keep their labels; the copies follow in
/// vertex order.
pub fn blow_up(base: &Graph, spec: &[(BlowKind, usize)]) -> Result<Graph, StructureError> {
    let n = base.order();
    if spec.len() != n || spec.iter().any(|&(_, s)| s == 0) {
        return Err(StructureError::BadSpec { expected: n, found: spec.len() });
    }
    let total: usize = spec.iter().map(|&(_, s)| s).sum();
    if total > MAX_ORDER {
        return Err(StructureError::SizeOverflow(total));
    }
    // owner[x] is the base vertex that x copies.
    let mut owner: Vec<usize> = (0..n).collect();
    for (v, &(_, s)) in spec.iter().enumerate() {
        owner.extend(std::iter::repeat_n(v, s - 1));
    }
    let mut g = Graph::empty(total).expect("checked size");
    for x in 0..total {
        for y in (x + 1)..total {
            let (a, b) = (owner[x], owner[y]);
            if if a == b { spec[a].0 == BlowKind::Clique } else { base.has_edge(a, b) } {
                g.add_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// Plain-text certificate: one `vertex: value` line per entry.
pub fn certificate_lines<T: fmt::Display>(values: impl IntoIterator<Item = T>) -> String {
    values.into_iter().enumerate().map(|(v, x)| format!("{v}: {x}\n")).collect()
}

impl OlariuReport {
    /// One line per component: its vertices, then the tag.
    pub fn certificate(&self) -> String {
        let mut out = String::new();
        for c in &self.components {
            let vs: Vec<String> = bits(c.vertices).map(|v| v.to_string()).collect();
            let tag = match &c.tag {
                OlariuTag::TriangleFree => "triangle_free".to_string(),
                OlariuTag::CompleteMultipartite => "complete_multipartite".to_string(),
                OlariuTag::Violation(e) => {
                    let w: Vec<String> = e.0.iter().map(|v| v.to_string()).collect();
                    format!("violation Z1 at {}", w.join(" "))
                }
            };
            out.push_str(&format!("{}: {tag}\n", vs.join(" ")));
        }
        out
    }
}
