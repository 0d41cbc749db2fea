//! Exhaustive small-graph checks: theorem verification over a class,
//! counterexample hunts, censuses and the derived C5 blow-up catalog.
//!
//! Reports list counterexamples one per line as
//! `counterexample<TAB>graph6<TAB>property<TAB>certificate`.

mod catalog;
mod generate;

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::expr::recognize;
use crate::graph::{chromatic_number, clique_number, decode_graph6, encode_graph6, independence_number, Graph, Graph6Error};
use crate::induced::is_free;
use crate::pairs::{ClassSpec, NamedClass, PairSpec, Property};
use crate::perfect::{is_perfect, ImperfectionWitness, TooLarge};

pub use catalog::{derive_l4_catalog, CatalogEntry, L4Catalog};
pub use generate::{generate_graphs, scan, Hereditary, Scan, GENERATOR_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("order {order} is beyond the generator limit of {limit}; use graph6 input for larger graphs")]
    OrderLimit { order: usize, limit: usize },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {error}")]
    Format { line: usize, error: Graph6Error },
    #[error(transparent)]
    TooLarge(#[from] TooLarge),
    /// A certificate failed its own re-check. Reports never carry these.
    #[error("certificate for {graph6} did not re-validate")]
    Revalidation { graph6: String },
    #[error("structural claim failed on {graph6}: {message}")]
    Claim { graph6: String, message: String },
}

/// A graph in the class, free of the pair, failing the property.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Counterexample {
    pub graph6: String,
    pub property: Property,
    pub certificate: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "counterexample\t{}\t{}\t{}", self.graph6, self.property, self.certificate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    AllHold,
    Violated,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::AllHold => "all_hold",
            Verdict::Violated => "violated",
        }
    }
}

/// Graphs seen at one order: those free of the pair, and those also in the class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct OrderCount {
    pub order: usize,
    pub free: usize,
    pub in_class: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub pair: String,
    pub class: ClassSpec,
    pub property: Property,
    pub n_max: usize,
    pub verdict: Verdict,
    pub counterexamples: Vec<Counterexample>,
    pub counts: Vec<OrderCount>,
}

impl VerificationReport {
    pub fn examined(&self) -> usize {
        self.counts.iter().map(|c| c.in_class).sum()
    }

    /// One line: verdict and totals.
    pub fn summary(&self) -> String {
        let free: usize = self.counts.iter().map(|c| c.free).sum();
        match self.verdict {
            Verdict::AllHold => {
                format!("all_hold; examined {} graphs in class ({free} free of the pair)", self.examined())
            }
            Verdict::Violated => format!(
                "violated; {} counterexamples among {} graphs in class ({free} free of the pair)",
                self.counterexamples.len(),
                self.examined()
            ),
        }
    }

    /// Full deterministic text report.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pair: {}", self.pair);
        let _ = writeln!(out, "class: {}", class_label(&self.class));
        let _ = writeln!(out, "property: {}", self.property);
        let _ = writeln!(out, "n_max: {}", self.n_max);
        for c in &self.counts {
            let _ = writeln!(out, "order {}: free {}, in class {}", c.order, c.free, c.in_class);
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.name());
        for c in &self.counterexamples {
            let _ = writeln!(out, "{c}");
        }
        out
    }
}

/// The class name when `spec` is one of the named classes, else its flags.
pub fn class_label(spec: &ClassSpec) -> String {
    if let Some(c) = NamedClass::ALL.into_iter().find(|c| c.spec() == *spec) {
        return c.name().to_string();
    }
    let mut parts = Vec::new();
    if spec.connected {
        parts.push("connected".to_string());
    }
    if spec.independence_at_least_3 {
        parts.push("alpha>=3".to_string());
    }
    if spec.exclude_c5 {
        parts.push("not C5".to_string());
    }
    if spec.exclude_odd_cycles {
        parts.push("not an odd cycle".to_string());
    }
    if let Some(m) = spec.min_order {
        parts.push(format!("order>={m}"));
    }
    if parts.is_empty() {
        "all graphs".to_string()
    } else {
        parts.join(", ")
    }
}

/// `{X, Y}` with recognized names where possible, graph6 otherwise.
pub fn pair_label(p: &PairSpec) -> String {
    let name = |g: &Graph| recognize(g).expression().unwrap_or_else(|| encode_graph6(g));
    format!("{{{}, {}}}", name(&p.x), name(&p.y))
}

/// Whether `g` fails `property`, with a certificate when it does.
pub fn property_failure(g: &Graph, property: Property) -> Result<Option<String>, TooLarge> {
    Ok(match property {
        Property::Perfect => {
            let cert = is_perfect(g)?;
            cert.witness.map(|w| witness_text(&w))
        }
        Property::OmegaColourable => {
            let (chi, omega) = (chromatic_number(g), clique_number(g));
            (chi != omega).then(|| format!("chi {chi} > omega {omega}"))
        }
    })
}

pub fn witness_text(w: &ImperfectionWitness) -> String {
    let list = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    match w {
        ImperfectionWitness::OddHole(c) => format!("odd hole {}", list(c)),
        ImperfectionWitness::OddAntihole(c) => format!("odd antihole {}", list(c)),
        ImperfectionWitness::ChiAboveOmega { vertices, chi, omega } => {
            format!("chi {chi} > omega {omega} on {}", list(vertices))
        }
    }
}

/// Re-checks a counterexample from scratch: class, freeness, and the
/// witness itself.
pub fn revalidate(c: &Counterexample, pair: &PairSpec, class: &ClassSpec) -> bool {
    let Ok(g) = decode_graph6(&c.graph6) else {
        return false;
    };
    if !class.contains(&g) || !is_free(&g, &pair.members()) {
        return false;
    }
    match c.property {
        Property::Perfect => {
            let Ok(cert) = is_perfect(&g) else { return false };
            !cert.perfect && cert.validate(&g)
        }
        Property::OmegaColourable => chromatic_number(&g) > clique_number(&g),
    }
}

fn examine(g: &Graph, class: &ClassSpec, property: Property) -> Result<Option<Option<Counterexample>>, TooLarge> {
    if !class.contains(g) {
        return Ok(None);
    }
    let cx = property_failure(g, property)?.map(|certificate| Counterexample {
        graph6: encode_graph6(g),
        property,
        certificate,
    });
    Ok(Some(cx))
}

fn build_report(
    pair: &PairSpec,
    class: &ClassSpec,
    property: Property,
    n_max: usize,
    free: Vec<usize>,
    outcomes: Vec<(usize, Option<Counterexample>)>,
) -> Result<VerificationReport, HarnessError> {
    let mut counts: Vec<OrderCount> =
        free.iter().enumerate().map(|(i, &f)| OrderCount { order: i + 1, free: f, in_class: 0 }).collect();
    let mut counterexamples = Vec::new();
    for (order, cx) in outcomes {
        counts[order - 1].in_class += 1;
        counterexamples.extend(cx);
    }
    counterexamples.sort_by(|a, b| (a.graph6.len(), &a.graph6).cmp(&(b.graph6.len(), &b.graph6)));
    for c in &counterexamples {
        if !revalidate(c, pair, class) {
            return Err(HarnessError::Revalidation { graph6: c.graph6.clone() });
        }
    }
    let verdict = if counterexamples.is_empty() { Verdict::AllHold } else { Verdict::Violated };
    Ok(VerificationReport {
        pair: pair_label(pair),
        class: *class,
        property,
        n_max,
        verdict,
        counterexamples,
        counts,
    })
}

/// Checks `property` on every {X, Y}-free graph of the class with
/// `1..=n_max` vertices. Freeness prunes the enumeration itself.
pub fn verify_universal(
    pair: &PairSpec,
    class: &ClassSpec,
    property: Property,
    n_max: usize,
) -> Result<VerificationReport, HarnessError> {
    let members = pair.members();
    let free = |g: &Graph| is_free(g, &members);
    let s = scan(n_max, Some(&free), false, |g| Some(examine(g, class, property).map(|o| o.map(|c| (g.order(), c)))))?;
    let outcomes: Vec<_> = s.hits.into_iter().collect::<Result<Vec<_>, _>>()?.into_iter().flatten().collect();
    build_report(pair, class, property, n_max, s.generated, outcomes)
}

/// Same as [`verify_universal`] over a given list of graphs.
pub fn verify_graphs(
    pair: &PairSpec,
    class: &ClassSpec,
    property: Property,
    graphs: &[Graph],
) -> Result<VerificationReport, HarnessError> {
    let members = pair.members();
    let n_max = graphs.iter().map(Graph::order).max().unwrap_or(0);
    let per: Vec<(usize, bool, Option<Option<Counterexample>>)> = graphs
        .par_iter()
        .map(|g| {
            let free = is_free(g, &members);
            let outcome = if free { examine(g, class, property)? } else { None };
            Ok((g.order(), free, outcome))
        })
        .collect::<Result<_, TooLarge>>()?;
    let mut free_counts = vec![0; n_max];
    let mut outcomes = Vec::new();
    for (order, free, outcome) in per {
        if order == 0 {
            continue;
        }
        if free {
            free_counts[order - 1] += 1;
        }
        if let Some(cx) = outcome {
            outcomes.push((order, cx));
        }
    }
    build_report(pair, class, property, n_max, free_counts, outcomes)
}

/// Every counterexample up to `n_max`. With `first_order_only`, the search
/// stops after the smallest order that has one.
pub fn hunt_counterexamples(
    pair: &PairSpec,
    class: &ClassSpec,
    property: Property,
    n_max: usize,
    first_order_only: bool,
) -> Result<Vec<Counterexample>, HarnessError> {
    let members = pair.members();
    let free = |g: &Graph| is_free(g, &members);
    let s = scan(n_max, Some(&free), first_order_only, |g| match examine(g, class, property) {
        Ok(Some(None)) | Ok(None) => None,
        Ok(Some(Some(c))) => Some(Ok(c)),
        Err(e) => Some(Err(e)),
    })?;
    let found = s.hits.into_iter().collect::<Result<Vec<_>, _>>()?;
    let report = build_report(pair, class, property, n_max, s.generated, found.into_iter().map(|c| (1, Some(c))).collect())?;
    Ok(report.counterexamples)
}

/// Extra predicates for a census.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Connected,
    Perfect,
    NotPerfect,
    OmegaColourable,
    NotOmegaColourable,
    OddCycle,
    NotOddCycle,
    IndependenceEquals(usize),
    IndependenceAtLeast(usize),
    InClass(NamedClass),
}

impl Predicate {
    pub fn holds(&self, g: &Graph) -> bool {
        let odd_cycle = || g.shape_report().is_odd_cycle;
        let perfect = || is_perfect(g).map(|c| c.perfect).unwrap_or(false);
        let omega = || chromatic_number(g) == clique_number(g);
        match self {
            Predicate::Connected => g.order() > 0 && g.is_connected(),
            Predicate::Perfect => perfect(),
            Predicate::NotPerfect => !perfect(),
            Predicate::OmegaColourable => omega(),
            Predicate::NotOmegaColourable => !omega(),
            Predicate::OddCycle => odd_cycle(),
            Predicate::NotOddCycle => !odd_cycle(),
            Predicate::IndependenceEquals(a) => independence_number(g) == *a,
            Predicate::IndependenceAtLeast(a) => independence_number(g) >= *a,
            Predicate::InClass(c) => c.contains(g),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Connected => f.write_str("connected"),
            Predicate::Perfect => f.write_str("perfect"),
            Predicate::NotPerfect => f.write_str("not_perfect"),
            Predicate::OmegaColourable => f.write_str("omega"),
            Predicate::NotOmegaColourable => f.write_str("not_omega"),
            Predicate::OddCycle => f.write_str("odd_cycle"),
            Predicate::NotOddCycle => f.write_str("not_odd_cycle"),
            Predicate::IndependenceEquals(a) => write!(f, "alpha={a}"),
            Predicate::IndependenceAtLeast(a) => write!(f, "alpha>={a}"),
            Predicate::InClass(c) => write!(f, "class={c}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let number = |t: &str| t.parse::<usize>().map_err(|_| format!("bad number in predicate '{s}'"));
        Ok(match s {
            "connected" => Predicate::Connected,
            "perfect" => Predicate::Perfect,
            "not_perfect" => Predicate::NotPerfect,
            "omega" => Predicate::OmegaColourable,
            "not_omega" => Predicate::NotOmegaColourable,
            "odd_cycle" => Predicate::OddCycle,
            "not_odd_cycle" => Predicate::NotOddCycle,
            _ => {
                if let Some(t) = s.strip_prefix("alpha>=") {
                    Predicate::IndependenceAtLeast(number(t)?)
                } else if let Some(t) = s.strip_prefix("alpha=") {
                    Predicate::IndependenceEquals(number(t)?)
                } else if let Some(t) = s.strip_prefix("class=") {
                    Predicate::InClass(t.parse()?)
                } else {
                    return Err(format!(
                        "unknown predicate '{s}' (expected connected, perfect, not_perfect, omega, not_omega, \
                         odd_cycle, not_odd_cycle, alpha=K, alpha>=K or class=NAME)"
                    ));
                }
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub patterns: Vec<Graph>,
    pub predicates: Vec<Predicate>,
    pub n_max: usize,
    /// graph6 of canonical forms, sorted by order then code.
    pub members: Vec<String>,
}

impl Census {
    pub fn render(&self) -> String {
        let names: Vec<String> = self
            .patterns
            .iter()
            .map(|g| recognize(g).expression().unwrap_or_else(|| encode_graph6(g)))
            .collect();
        let preds: Vec<String> = self.predicates.iter().map(|p| p.to_string()).collect();
        let mut out = format!(
            "free: {{{}}}\npredicates: {}\nn_max: {}\nmembers: {}\n",
            names.join(", "),
            if preds.is_empty() { "none".to_string() } else { preds.join(", ") },
            self.n_max,
            self.members.len()
        );
        for m in &self.members {
            let order = decode_graph6(m).map(|g| g.order()).unwrap_or(0);
            let _ = writeln!(out, "{order}\t{m}");
        }
        out
    }
}

/// All graphs up to `n_max` vertices, up to isomorphism, that are free of
/// every pattern and satisfy every predicate.
pub fn census(patterns: &[Graph], predicates: &[Predicate], n_max: usize) -> Result<Census, HarnessError> {
    let free = |g: &Graph| is_free(g, patterns);
    let s = scan(n_max, Some(&free), false, |g| {
        predicates.iter().all(|p| p.holds(g)).then(|| (g.order(), encode_graph6(g)))
    })?;
    let mut members = s.hits;
    members.sort();
    members.dedup();
    Ok(Census {
        patterns: patterns.to_vec(),
        predicates: predicates.to_vec(),
        n_max,
        members: members.into_iter().map(|(_, m)| m).collect(),
    })
}

/// Decodes one graph6 string per line. Blank lines and a leading
/// `>>graph6<<` header are skipped.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if i == 0 {
            line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        out.push(decode_graph6(line).map_err(|error| HarnessError::Format { line: i + 1, error })?);
    }
    Ok(out)
}

pub fn ingest_graph6(path: &Path) -> Result<Vec<Graph>, HarnessError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| HarnessError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_graph6_lines(&text)
}
