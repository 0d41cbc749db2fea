//! Twin-collapsed bases of {2K1+K2, gem}-free graphs containing C5.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{scan, HarnessError};
use crate::expr::build;
use crate::graph::{bits, canonical_form, encode_graph6, ClassKind, Graph};
use crate::induced::is_free;
use crate::structure::{l4_classify, Precondition, StructureError};

/// A base graph and the ways its vertices were seen blown up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Canonical form.
    pub base: Graph,
    /// Base vertices observed as classes of false twins.
    pub independent: u64,
    /// Base vertices observed as classes of true twins.
    pub clique: u64,
    /// Enumerated graphs collapsing to this base.
    pub occurrences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L4Catalog {
    pub n_max: usize,
    /// Sorted by order, then canonical code.
    pub entries: Vec<CatalogEntry>,
    /// Graphs examined (containing C5) per order `1..=n_max`.
    pub graphs: Vec<usize>,
}

impl L4Catalog {
    pub fn render(&self) -> String {
        let total: usize = self.graphs.iter().sum();
        let mut out = format!(
            "free: {{2K1+K2, co(K1+P4)}}, containing C5\nn_max: {}\ngraphs: {total}\nbases: {}\n",
            self.n_max,
            self.entries.len()
        );
        let list = |m: u64| {
            let v: Vec<String> = bits(m).map(|x| x.to_string()).collect();
            if v.is_empty() {
                "-".to_string()
            } else {
                v.join(",")
            }
        };
        for e in &self.entries {
            let _ = writeln!(
                out,
                "base\t{}\tindependent {}\tclique {}\toccurrences {}",
                encode_graph6(&e.base),
                list(e.independent),
                list(e.clique),
                e.occurrences
            );
        }
        out
    }

    pub fn entry(&self, base: &Graph) -> Option<&CatalogEntry> {
        let code = encode_graph6(&canonical_form(base).form);
        self.entries.iter().find(|e| encode_graph6(&e.base) == code)
    }
}

/// Canonical base of `g` with the kinds of its classes on canonical labels.
pub(crate) fn canonical_base(g: &Graph) -> Result<Option<(Graph, u64, u64)>, StructureError> {
    let d = match l4_classify(g) {
        Ok(d) => d,
        Err(StructureError::Precondition(Precondition::MissingC5)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let cf = canonical_form(&d.collapse.base);
    let (mut independent, mut clique) = (0u64, 0u64);
    for (j, &old) in cf.order.iter().enumerate() {
        match d.collapse.classes[old].kind {
            ClassKind::Independent => independent |= 1 << j,
            ClassKind::Clique => clique |= 1 << j,
            ClassKind::Single => {}
        }
    }
    Ok(Some((cf.form, independent, clique)))
}

/// Enumerates {2K1+K2, co(K1+P4)}-free graphs with an induced C5 on at most
/// `n_max` vertices, twin-collapses each and merges the bases.
pub fn derive_l4_catalog(n_max: usize) -> Result<L4Catalog, HarnessError> {
    let patterns = [build("2K1+K2").expect("pattern"), build("co(K1+P4)").expect("pattern")];
    let free = |g: &Graph| is_free(g, &patterns);
    let s = scan(n_max, Some(&free), false, |g| match canonical_base(g) {
        Ok(None) => None,
        Ok(Some(b)) => Some(Ok((g.order(), b))),
        Err(e) => Some(Err(HarnessError::Claim { graph6: encode_graph6(g), message: e.to_string() })),
    })?;
    let mut graphs = vec![0; n_max];
    let mut merged: BTreeMap<(usize, String), CatalogEntry> = BTreeMap::new();
    for hit in s.hits {
        let (order, (base, independent, clique)) = hit?;
        graphs[order - 1] += 1;
        let key = (base.order(), encode_graph6(&base));
        let e = merged.entry(key).or_insert(CatalogEntry { base, independent: 0, clique: 0, occurrences: 0 });
        e.independent |= independent;
        e.clique |= clique;
        e.occurrences += 1;
    }
    Ok(L4Catalog { n_max, entries: merged.into_values().collect(), graphs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;

    #[test]
    fn order_five_is_c5() {
        let c = derive_l4_catalog(5).unwrap();
        assert_eq!(c.entries.len(), 1);
        assert!(isomorphic(&c.entries[0].base, &build("C5").unwrap()));
        assert_eq!(c.graphs, vec![0, 0, 0, 0, 1]);
    }
}
