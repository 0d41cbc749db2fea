//! Recognition of the named and parametric graph shapes.
//!
//! Tags are tried in a fixed order and the first match wins:
//! `kK1`, `Kn`, `kK1+K2`, `co(kK1+K2)` (k >= 2), complete multipartite,
//! `Cn` (n >= 4), `Pn` (n >= 3), then the individually named graphs.
//! Consequently `K3` is never reported as `C3`, `K2` never as `P2`, the
//! diamond is reported as `co(2K1+K2)`, the claw as `K1,3` and `P3` as `K1,2`.

use std::fmt;
use std::sync::OnceLock;

use super::build;
use crate::graph::{canonical_code, CanonicalCode, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedForm {
    KK1 { k: usize },
    Complete { n: usize },
    KK1PlusK2 { k: usize },
    CoKK1PlusK2 { k: usize },
    /// Part sizes in ascending order; at least two parts, not all of size one.
    CompleteMultipartite { parts: Vec<usize> },
    Cycle { n: usize },
    Path { n: usize },
    K13Plus,
    Z1,
    Z2,
    K1P3,
    K1P4,
    K1K13,
    K1K3,
    TwoK2,
    CoK1P4,
    CoK3P4,
    Other,
}

impl NamedForm {
    /// An expression that evaluates to a graph of this shape.
    pub fn expression(&self) -> Option<String> {
        Some(match self {
            NamedForm::KK1 { k: 1 } => "K1".to_string(),
            NamedForm::KK1 { k } => format!("{k}K1"),
            NamedForm::Complete { n } => format!("K{n}"),
            NamedForm::KK1PlusK2 { k: 1 } => "K1+K2".to_string(),
            NamedForm::KK1PlusK2 { k } => format!("{k}K1+K2"),
            NamedForm::CoKK1PlusK2 { k } => format!("co({k}K1+K2)"),
            NamedForm::CompleteMultipartite { parts } => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                format!("K{}", parts.join(","))
            }
            NamedForm::Cycle { n } => format!("C{n}"),
            NamedForm::Path { n } => format!("P{n}"),
            NamedForm::Other => return None,
            fixed => SPECIFIC
                .iter()
                .find(|(tag, _)| tag == fixed)
                .map(|(_, text)| text.to_string())
                .expect("every fixed tag has an expression"),
        })
    }
}

impl fmt::Display for NamedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.expression() {
            Some(text) => f.write_str(&text),
            None => f.write_str("other"),
        }
    }
}

const SPECIFIC: [(NamedForm, &str); 10] = [
    (NamedForm::K13Plus, "chair"),
    (NamedForm::Z1, "Z1"),
    (NamedForm::Z2, "Z2"),
    (NamedForm::K1P3, "K1+P3"),
    (NamedForm::K1P4, "K1+P4"),
    (NamedForm::K1K13, "K1+K1,3"),
    (NamedForm::K1K3, "K1+K3"),
    (NamedForm::TwoK2, "2K2"),
    (NamedForm::CoK1P4, "co(K1+P4)"),
    (NamedForm::CoK3P4, "co(K3+P4)"),
];

fn specific_codes() -> &'static [(CanonicalCode, NamedForm)] {
    static CODES: OnceLock<Vec<(CanonicalCode, NamedForm)>> = OnceLock::new();
    CODES.get_or_init(|| {
        SPECIFIC
            .iter()
            .map(|(tag, text)| (canonical_code(&build(text).expect("catalog expression")), tag.clone()))
            .collect()
    })
}

pub fn recognize(g: &Graph) -> NamedForm {
    let n = g.order();
    if n == 0 {
        return NamedForm::Other;
    }
    let m = g.edge_count();
    let all = n * (n - 1) / 2;
    if m == 0 {
        return NamedForm::KK1 { k: n };
    }
    if m == all {
        return NamedForm::Complete { n };
    }
    if m == 1 && n >= 3 {
        return NamedForm::KK1PlusK2 { k: n - 2 };
    }
    if m + 1 == all && n >= 4 {
        return NamedForm::CoKK1PlusK2 { k: n - 2 };
    }
    let shape = g.shape_report();
    if shape.complete_multipartite {
        let mut parts: Vec<usize> = g
            .multipartite_parts()
            .expect("complete multipartite")
            .iter()
            .map(|p| p.count_ones() as usize)
            .collect();
        parts.sort_unstable();
        return NamedForm::CompleteMultipartite { parts };
    }
    if shape.is_cycle {
        return NamedForm::Cycle { n };
    }
    if shape.is_path {
        return NamedForm::Path { n };
    }
    if n <= 7 {
        let code = canonical_code(g);
        if let Some((_, tag)) = specific_codes().iter().find(|(c, _)| *c == code) {
            return tag.clone();
        }
    }
    NamedForm::Other
}
