//! Graph classes given by connectivity, independence and odd-cycle
//! constraints, and the two graph properties they are studied under.

use std::fmt;
use std::str::FromStr;

use crate::graph::{independence_number, Graph};

/// Constraint flags; a graph belongs to the class when it meets all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ClassSpec {
    pub connected: bool,
    pub independence_at_least_3: bool,
    pub exclude_c5: bool,
    pub exclude_odd_cycles: bool,
    pub min_order: Option<usize>,
}

impl ClassSpec {
    /// Membership test, cheapest checks first.
    pub fn contains(&self, g: &Graph) -> bool {
        if self.min_order.is_some_and(|m| g.order() < m) {
            return false;
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        if self.exclude_c5 || self.exclude_odd_cycles {
            let n = g.order();
            let cycle_shaped = n >= 3 && n % 2 == 1 && g.edge_count() == n && g.shape_report().is_cycle;
            if cycle_shaped && (self.exclude_odd_cycles || n == 5) {
                return false;
            }
        }
        if self.independence_at_least_3 && independence_number(g) < 3 {
            return false;
        }
        true
    }
}

/// The ten named classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedClass {
    /// All graphs.
    G,
    /// Graphs other than C5.
    G5,
    /// Graphs other than odd cycles.
    Go,
    /// Connected graphs.
    Gc,
    /// Connected graphs other than C5.
    Gc5,
    /// Graphs of independence number at least 3.
    Ga,
    /// Graphs of independence number at least 3 other than odd cycles.
    Goa,
    /// Connected graphs of independence number at least 3.
    Gca,
    /// Connected graphs other than odd cycles.
    Gco,
    /// Connected graphs of independence number at least 3 other than odd cycles.
    Gcoa,
}

impl NamedClass {
    pub const ALL: [NamedClass; 10] = [
        NamedClass::G,
        NamedClass::G5,
        NamedClass::Go,
        NamedClass::Gc,
        NamedClass::Gc5,
        NamedClass::Ga,
        NamedClass::Goa,
        NamedClass::Gca,
        NamedClass::Gco,
        NamedClass::Gcoa,
    ];

    pub fn spec(self) -> ClassSpec {
        use NamedClass::*;
        ClassSpec {
            connected: matches!(self, Gc | Gc5 | Gca | Gco | Gcoa),
            independence_at_least_3: matches!(self, Ga | Goa | Gca | Gcoa),
            exclude_c5: matches!(self, G5 | Gc5),
            exclude_odd_cycles: matches!(self, Go | Goa | Gco | Gcoa),
            min_order: None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedClass::G => "G",
            NamedClass::G5 => "G5",
            NamedClass::Go => "Go",
            NamedClass::Gc => "Gc",
            NamedClass::Gc5 => "Gc5",
            NamedClass::Ga => "Ga",
            NamedClass::Goa => "Goa",
            NamedClass::Gca => "Gca",
            NamedClass::Gco => "Gco",
            NamedClass::Gcoa => "Gcoa",
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        self.spec().contains(g)
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown class '{s}' (expected one of G, G5, Go, Gc, Gc5, Ga, Goa, Gca, Gco, Gcoa)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Perfect,
    OmegaColourable,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::Perfect => "perfect",
            Property::OmegaColourable => "omega",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "perfect" => Ok(Property::Perfect),
            "omega" | "omega_colourable" => Ok(Property::OmegaColourable),
            _ => Err(format!("unknown property '{s}' (expected perfect or omega)")),
        }
    }
}
