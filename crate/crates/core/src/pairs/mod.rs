//! Membership of graph pairs in the perfectness and ω-colourability
//! collections, and the mapping from (class, property) to the collection
//! that characterizes it.

mod class;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::expr::{build, ExprError};
use crate::graph::{canonical_code, CanonicalCode, Graph};
use crate::induced::contains_induced;

pub use class::{ClassSpec, NamedClass, Property};

/// An unordered pair of graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSpec {
    pub x: Graph,
    pub y: Graph,
}

impl PairSpec {
    pub fn new(x: Graph, y: Graph) -> Self {
        Self { x, y }
    }

    /// Builds both members from expressions.
    pub fn parse(x: &str, y: &str) -> Result<Self, ExprError> {
        Ok(Self::new(build(x)?, build(y)?))
    }

    pub fn members(&self) -> [Graph; 2] {
        [self.x.clone(), self.y.clone()]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CollectionId {
    P1,
    O1,
    P2,
    P2c,
    P3,
    P4,
    O2,
    O2c,
    O3,
    O4,
    P1plus,
    P1cplus,
    P2plus,
    P2cplus,
    P3plus,
    P4plus,
    O1plus,
    O1cplus,
    O2plus,
    O2cplus,
    O3plus,
    O4plus,
    I,
    R,
    AP,
    A1,
    Ac,
    A3,
    AOmega,
}

impl CollectionId {
    pub const ALL: [CollectionId; 29] = [
        CollectionId::P1,
        CollectionId::O1,
        CollectionId::P2,
        CollectionId::P2c,
        CollectionId::P3,
        CollectionId::P4,
        CollectionId::O2,
        CollectionId::O2c,
        CollectionId::O3,
        CollectionId::O4,
        CollectionId::P1plus,
        CollectionId::P1cplus,
        CollectionId::P2plus,
        CollectionId::P2cplus,
        CollectionId::P3plus,
        CollectionId::P4plus,
        CollectionId::O1plus,
        CollectionId::O1cplus,
        CollectionId::O2plus,
        CollectionId::O2cplus,
        CollectionId::O3plus,
        CollectionId::O4plus,
        CollectionId::I,
        CollectionId::R,
        CollectionId::AP,
        CollectionId::A1,
        CollectionId::Ac,
        CollectionId::A3,
        CollectionId::AOmega,
    ];

    pub fn name(self) -> &'static str {
        use CollectionId::*;
        match self {
            P1 => "P1",
            O1 => "O1",
            P2 => "P2",
            P2c => "P2c",
            P3 => "P3",
            P4 => "P4",
            O2 => "O2",
            O2c => "O2c",
            O3 => "O3",
            O4 => "O4",
            P1plus => "P1+",
            P1cplus => "P1c+",
            P2plus => "P2+",
            P2cplus => "P2c+",
            P3plus => "P3+",
            P4plus => "P4+",
            O1plus => "O1+",
            O1cplus => "O1c+",
            O2plus => "O2+",
            O2cplus => "O2c+",
            O3plus => "O3+",
            O4plus => "O4+",
            I => "I",
            R => "R",
            AP => "A_P",
            A1 => "A_1",
            Ac => "A_c",
            A3 => "A_3",
            AOmega => "A_Omega",
        }
    }
}

impl fmt::Display for CollectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CollectionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CollectionId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown collection '{s}'"))
    }
}

/// The small graphs named in the sporadic pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Small {
    ThreeK1,
    K1P3,
    TwoK1K2,
    K3,
    Z1,
    D,
    Claw,
    Chair,
    P5,
    TwoK2,
    K1K3,
    Z2,
    Gem,
    K1Claw,
}

const SMALL: [(Small, &str); 14] = [
    (Small::ThreeK1, "3K1"),
    (Small::K1P3, "K1+P3"),
    (Small::TwoK1K2, "2K1+K2"),
    (Small::K3, "K3"),
    (Small::Z1, "Z1"),
    (Small::D, "D"),
    (Small::Claw, "K1,3"),
    (Small::Chair, "chair"),
    (Small::P5, "P5"),
    (Small::TwoK2, "2K2"),
    (Small::K1K3, "K1+K3"),
    (Small::Z2, "Z2"),
    (Small::Gem, "gem"),
    (Small::K1Claw, "K1+K1,3"),
];

struct Reference {
    small: Vec<(CanonicalCode, Small)>,
    p4: Graph,
    co_k3_p4: Graph,
}

fn reference() -> &'static Reference {
    static REF: OnceLock<Reference> = OnceLock::new();
    REF.get_or_init(|| Reference {
        small: SMALL
            .iter()
            .map(|&(s, text)| (canonical_code(&build(text).expect("catalog expression")), s))
            .collect(),
        p4: build("P4").expect("catalog expression"),
        co_k3_p4: build("co(K3+P4)").expect("catalog expression"),
    })
}

/// What the definitions need to know about one member of a pair.
#[derive(Debug, Clone)]
struct Features {
    small: Option<Small>,
    in_p4: bool,
    in_co_k3_p4: bool,
    /// `k` when the graph is `kK1`.
    edgeless: Option<usize>,
    /// `l` when the graph is `K_l`.
    complete: Option<usize>,
    /// `k` when the graph is `kK1 + K2`.
    edgeless_plus_edge: Option<usize>,
    /// `k` when the graph is the complement of `kK1 + K2`.
    co_edgeless_plus_edge: Option<usize>,
}

impl Features {
    fn of(g: &Graph) -> Self {
        let r = reference();
        let n = g.order();
        let m = g.edge_count();
        let all = n * n.saturating_sub(1) / 2;
        let small = if n <= 5 {
            let code = canonical_code(g);
            r.small.iter().find(|(c, _)| *c == code).map(|&(_, s)| s)
        } else {
            None
        };
        Self {
            small,
            in_p4: contains_induced(&r.p4, g).is_some(),
            in_co_k3_p4: contains_induced(&r.co_k3_p4, g).is_some(),
            edgeless: (n >= 1 && m == 0).then_some(n),
            complete: (n >= 1 && m == all).then_some(n),
            edgeless_plus_edge: (n >= 2 && m == 1).then(|| n - 2),
            co_edgeless_plus_edge: (n >= 2 && m + 1 == all).then(|| n - 2),
        }
    }

    fn is(&self, s: Small) -> bool {
        self.small == Some(s)
    }
}

/// Membership of one pair in every collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MembershipVector([bool; 29]);

impl MembershipVector {
    pub fn get(&self, id: CollectionId) -> bool {
        self.0[id as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (CollectionId, bool)> + '_ {
        CollectionId::ALL.into_iter().map(|id| (id, self.get(id)))
    }
}

pub fn classify_pair(p: &PairSpec) -> MembershipVector {
    let a = Features::of(&p.x);
    let b = Features::of(&p.y);
    let either = |f: &dyn Fn(&Features, &Features) -> bool| f(&a, &b) || f(&b, &a);
    let pair = |s: Small, t: Small| either(&|x, y| x.is(s) && y.is(t));
    use Small::*;

    let p1 = a.in_p4
        || b.in_p4
        || pair(ThreeK1, K3)
        || pair(ThreeK1, Z1)
        || pair(ThreeK1, D)
        || pair(K1P3, K3)
        || pair(K1P3, Z1)
        || pair(K1P3, D)
        || pair(TwoK1K2, K3)
        || pair(TwoK1K2, Z1);
    let e_pair = pair(TwoK1K2, D);
    let gem_pair = pair(TwoK1K2, Gem);
    let o1 = p1 || e_pair;
    let i = a.is(ThreeK1) || b.is(ThreeK1);
    let p2 = p1 || i || either(&|x, y| x.is(K1P3) && y.in_co_k3_p4);
    let p2c = p2 || pair(Claw, TwoK2) || pair(Claw, P5);
    let p3 = p1 || pair(Claw, K3) || pair(Claw, Z1) || pair(Chair, K3) || pair(Chair, Z1);
    let p4 = p2c || p3 || pair(Claw, K1K3) || pair(Claw, Z2);
    let o2 = p2 || e_pair || gem_pair;
    let o2c = p2c || e_pair || gem_pair;
    let o3 = p3 || e_pair;
    let o4 = p4 || e_pair || gem_pair;

    let big_edgeless = |x: &Features| x.edgeless.is_some_and(|k| k >= 4);
    let big_edgeless_plus_edge = |x: &Features| x.edgeless_plus_edge.is_some_and(|k| k >= 3);
    let r = either(&|x, y| big_edgeless(x) && y.complete.is_some_and(|l| l >= 3));
    let ap = r || e_pair || either(&|x, y| big_edgeless_plus_edge(x) && y.is(K3));
    let a1 = either(&|x, y| {
        x.is(ThreeK1)
            && (y.complete.is_some_and(|l| l >= 4) || y.co_edgeless_plus_edge.is_some_and(|k| k >= 3))
    });
    let ac = either(&|x, y| (big_edgeless(x) || big_edgeless_plus_edge(x)) && y.is(Z1));
    let a3 = pair(K1Claw, K3) || pair(K1Claw, Z1);
    // The design keeps the plain union here; excluding {2K1+K2, D} changes
    // nothing because every collection using this family already has it.
    let a_omega = ap
        || ac
        || either(&|x, y| (big_edgeless(x) || big_edgeless_plus_edge(x)) && y.is(D))
        || either(&|x, y| big_edgeless(x) && y.co_edgeless_plus_edge.is_some_and(|l| l >= 3));

    let o1plus = o1 || a_omega || a1;
    let mut v = [false; 29];
    for (id, value) in [
        (CollectionId::P1, p1),
        (CollectionId::O1, o1),
        (CollectionId::P2, p2),
        (CollectionId::P2c, p2c),
        (CollectionId::P3, p3),
        (CollectionId::P4, p4),
        (CollectionId::O2, o2),
        (CollectionId::O2c, o2c),
        (CollectionId::O3, o3),
        (CollectionId::O4, o4),
        (CollectionId::P1plus, p1 || ap || a1),
        (CollectionId::P1cplus, p1 || ap || a1 || ac),
        (CollectionId::P2plus, p2 || ap),
        (CollectionId::P2cplus, p2c || ap || ac),
        (CollectionId::P3plus, p3 || ap || a1 || ac || a3),
        (CollectionId::P4plus, p4 || ap || ac || a3),
        (CollectionId::O1plus, o1plus),
        (CollectionId::O1cplus, o1plus),
        (CollectionId::O2plus, o2 || a_omega),
        (CollectionId::O2cplus, o2c || a_omega),
        (CollectionId::O3plus, o3 || a_omega || a1 || a3),
        (CollectionId::O4plus, o4 || a_omega || a3),
        (CollectionId::I, i),
        (CollectionId::R, r),
        (CollectionId::AP, ap),
        (CollectionId::A1, a1),
        (CollectionId::Ac, ac),
        (CollectionId::A3, a3),
        (CollectionId::AOmega, a_omega),
    ] {
        v[id as usize] = value;
    }
    MembershipVector(v)
}

pub fn in_collection(p: &PairSpec, c: CollectionId) -> bool {
    classify_pair(p).get(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("no characterization for class {class} under {property} without exceptions")]
    NoExceptionsUncovered { class: NamedClass, property: Property },
    #[error("no characterization for class {class} under {property} with finitely many exceptions")]
    FiniteExceptionsUncovered { class: NamedClass, property: Property },
}

/// The collection characterizing `class` under `property`: pairs for which
/// every free graph of the class has the property, or, with
/// `finite_exceptions`, pairs for which only finitely many free graphs of the
/// class lack it.
pub fn theorem_collection(
    class: NamedClass,
    property: Property,
    finite_exceptions: bool,
) -> Result<CollectionId, TheoremError> {
    use CollectionId::*;
    use NamedClass::*;
    use Property::*;
    let found = match (finite_exceptions, property, class) {
        (false, Perfect, G5 | Go | Gc5) => Some(P1),
        (false, Perfect, Ga | Goa) => Some(P2),
        (false, Perfect, Gca) => Some(P2c),
        (false, Perfect, Gco) => Some(P3),
        (false, Perfect, Gcoa) => Some(P4),
        (false, OmegaColourable, G5 | Go | Gc5) => Some(O1),
        (false, OmegaColourable, Ga | Goa) => Some(O2),
        (false, OmegaColourable, Gca) => Some(O2c),
        (false, OmegaColourable, Gco) => Some(O3),
        (false, OmegaColourable, Gcoa) => Some(O4),
        (true, Perfect, G | Go) => Some(P1plus),
        (true, Perfect, Gc) => Some(P1cplus),
        (true, Perfect, Ga | Goa) => Some(P2plus),
        (true, Perfect, Gca) => Some(P2cplus),
        (true, Perfect, Gco) => Some(P3plus),
        (true, Perfect, Gcoa) => Some(P4plus),
        (true, OmegaColourable, G | Go | Gc) => Some(O1plus),
        (true, OmegaColourable, Ga | Goa) => Some(O2plus),
        (true, OmegaColourable, Gca) => Some(O2cplus),
        (true, OmegaColourable, Gco) => Some(O3plus),
        (true, OmegaColourable, Gcoa) => Some(O4plus),
        _ => None,
    };
    found.ok_or(if finite_exceptions {
        TheoremError::FiniteExceptionsUncovered { class, property }
    } else {
        TheoremError::NoExceptionsUncovered { class, property }
    })
}
