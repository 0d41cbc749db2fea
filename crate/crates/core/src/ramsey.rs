//! Ramsey numbers R(k, l) and the explicit order and clique thresholds built
//! from them.
//!
//! R(k, l) is the least r such that every graph on r vertices contains an
//! induced kK1 or K_l. Known small values come from a table; everything else
//! is an upper bound from the additive recurrence, which is sound wherever a
//! threshold only needs to be large enough.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::expr::catalog;
use crate::graph::Graph;

/// A Ramsey value or threshold and whether it is exact. Values that do not
/// fit in 128 bits saturate at `u128::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundValue {
    pub value: u128,
    pub exact: bool,
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value == u128::MAX {
            f.write_str("overflow (upper bound)")
        } else if self.exact {
            write!(f, "{} (exact)", self.value)
        } else {
            write!(f, "{} (upper bound)", self.value)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyError {
    #[error("Ramsey parameters must be positive, got ({0}, {1})")]
    NonPositive(u64, u64),
    #[error("line {line}: expected 'R(k,l)=value', got '{text}'")]
    OverrideSyntax { line: usize, text: String },
    #[error("{name} needs {requirement}")]
    Parameter { name: &'static str, requirement: &'static str },
}

/// Exact values of R(k, l) for k <= l beyond the trivial rows.
const KNOWN: [((u64, u64), u128); 6] = [
    ((3, 3), 6),
    ((3, 4), 9),
    ((3, 5), 14),
    ((3, 6), 18),
    ((3, 7), 23),
    ((4, 4), 18),
];

/// Table of exact values; all other entries are bounded by recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyTable {
    exact: BTreeMap<(u64, u64), u128>,
}

impl Default for RamseyTable {
    fn default() -> Self {
        Self { exact: KNOWN.into_iter().collect() }
    }
}

/// Beyond this many recurrence cells the binomial bound is used instead.
const RECURRENCE_CELLS: u64 = 1 << 20;

impl RamseyTable {
    /// The built-in table with entries replaced or added from override text:
    /// one `R(k,l)=value` per line, `#` starts a comment.
    pub fn with_overrides(text: &str) -> Result<Self, RamseyError> {
        let mut table = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || RamseyError::OverrideSyntax { line: i + 1, text: raw.to_string() };
            let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
            let (lhs, value) = compact.split_once('=').ok_or_else(bad)?;
            let inner = lhs.strip_prefix("R(").and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
            let (k, l) = inner.split_once(',').ok_or_else(bad)?;
            let k: u64 = k.parse().map_err(|_| bad())?;
            let l: u64 = l.parse().map_err(|_| bad())?;
            let value: u128 = value.parse().map_err(|_| bad())?;
            if k == 0 || l == 0 {
                return Err(bad());
            }
            table.exact.insert((k.min(l), k.max(l)), value);
        }
        Ok(table)
    }

    pub fn ramsey(&self, k: u64, l: u64) -> Result<BoundValue, RamseyError> {
        if k == 0 || l == 0 {
            return Err(RamseyError::NonPositive(k, l));
        }
        let (a, b) = (k.min(l), k.max(l));
        if let Some(&value) = self.exact.get(&(a, b)) {
            return Ok(BoundValue { value, exact: true });
        }
        match a {
            1 => return Ok(BoundValue { value: 1, exact: true }),
            2 => return Ok(BoundValue { value: b as u128, exact: true }),
            _ => {}
        }
        let value = if a.saturating_mul(b) > RECURRENCE_CELLS {
            binomial_bound(a, b)
        } else {
            self.recurrence(a, b)
        };
        Ok(BoundValue { value, exact: false })
    }

    /// Recurrence bound over the rectangle 1..=a by 1..=b, one row at a time.
    fn recurrence(&self, a: u64, b: u64) -> u128 {
        let width = b as usize;
        let mut prev = vec![0u128; width + 1];
        let mut row = vec![0u128; width + 1];
        for i in 1..=a {
            for j in 1..=b {
                let key = (i.min(j), i.max(j));
                row[j as usize] = if let Some(&v) = self.exact.get(&key) {
                    v
                } else if key.0 == 1 {
                    1
                } else if key.0 == 2 {
                    key.1 as u128
                } else {
                    let left = prev[j as usize];
                    let right = row[j as usize - 1];
                    let v = left.saturating_add(right);
                    // Both summands even: the bound drops by one.
                    if v != u128::MAX && left.is_multiple_of(2) && right.is_multiple_of(2) {
                        v - 1
                    } else {
                        v
                    }
                };
            }
            std::mem::swap(&mut prev, &mut row);
        }
        prev[width]
    }

    /// A stored graph on R(k, l) - 1 vertices with neither kK1 nor K_l,
    /// certifying the lower bound of an exact entry.
    pub fn witness(&self, k: u64, l: u64) -> Option<Graph> {
        let (a, b) = (k.min(l), k.max(l));
        let g = match (a, b) {
            (1, _) => Graph::empty(0).ok()?,
            (2, b) => catalog::complete(b as usize - 1).ok()?,
            (3, 3) => catalog::cycle(5).ok()?,
            (3, 4) => circulant(8, &[1, 4]).complement(),
            (3, 5) => circulant(13, &[1, 5]).complement(),
            (4, 4) => paley(17),
            _ => return None,
        };
        // Witnesses are stored for k <= l; swap roles by complementing.
        Some(if k <= l { g } else { g.complement() })
    }
}

/// C(k + l - 2, k - 1), saturating.
fn binomial_bound(k: u64, l: u64) -> u128 {
    let n = (k + l - 2) as u128;
    let r = (k.min(l) - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step.
        match acc.checked_mul(n - i) {
            Some(v) => acc = v / (i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

fn circulant(n: usize, jumps: &[usize]) -> Graph {
    let mut g = Graph::empty(n).expect("small circulant");
    for v in 0..n {
        for &j in jumps {
            g.add_edge(v, (v + j) % n);
        }
    }
    g
}

/// Paley graph on a prime `p` with `p % 4 == 1`.
fn paley(p: usize) -> Graph {
    let squares: Vec<usize> = (1..p).map(|x| x * x % p).collect();
    let jumps: Vec<usize> = (1..=p / 2).filter(|d| squares.contains(d)).collect();
    circulant(p, &jumps)
}

/// R(k, l) from the built-in table.
pub fn ramsey(k: u64, l: u64) -> Result<BoundValue, RamseyError> {
    RamseyTable::default().ramsey(k, l)
}

/// The named thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Threshold {
    /// Order from which every {kK1+K2, K3}-free graph is bipartite (k >= 2).
    BipartiteKK1K2,
    /// Order from which a connected {K1+K1,3, K3}-free graph has the path,
    /// cycle or complete bipartite shape.
    Indep5,
    /// Order from which a kK1-free complete multipartite graph contains K_l.
    MultipartiteClique,
    /// Size of the complete-multipartite part forcing a large clique in the
    /// M/N split of a {kK1+K2, Z1}-free graph (k >= 2).
    MnSplit,
    /// Order from which {kK1+K2, Z1}-free graphs are ω-colourable (k >= 3).
    OmegaKK1K2Z1,
    /// Order from which {kK1+K2, D}-free graphs are ω-colourable (k >= 3).
    OmegaKK1K2D,
    /// Order from which {(k+1)K1, co(lK1+K2)}-free graphs are ω-colourable
    /// (k >= 3, l >= 2).
    OmegaCo,
    /// Clique number from which {kK1+K2, co(lK1+K2)}-free graphs are
    /// ω-colourable (k >= 3, l >= 2).
    L5Omega,
}

impl Threshold {
    pub const ALL: [Threshold; 8] = [
        Threshold::BipartiteKK1K2,
        Threshold::Indep5,
        Threshold::MultipartiteClique,
        Threshold::MnSplit,
        Threshold::OmegaKK1K2Z1,
        Threshold::OmegaKK1K2D,
        Threshold::OmegaCo,
        Threshold::L5Omega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Threshold::BipartiteKK1K2 => "bipartite_kK1K2",
            Threshold::Indep5 => "indep5",
            Threshold::MultipartiteClique => "multipartite_clique",
            Threshold::MnSplit => "mn_split",
            Threshold::OmegaKK1K2Z1 => "omega_kK1K2_Z1",
            Threshold::OmegaKK1K2D => "omega_kK1K2_D",
            Threshold::OmegaCo => "omega_co",
            Threshold::L5Omega => "l5_omega",
        }
    }

    /// Number of integer parameters (`k`, then `l`).
    pub fn arity(self) -> usize {
        match self {
            Threshold::Indep5 => 0,
            Threshold::BipartiteKK1K2 | Threshold::MnSplit | Threshold::OmegaKK1K2Z1 | Threshold::OmegaKK1K2D => 1,
            Threshold::MultipartiteClique | Threshold::OmegaCo | Threshold::L5Omega => 2,
        }
    }
}

impl std::str::FromStr for Threshold {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Threshold::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown threshold '{s}'"))
    }
}

/// ⌈8k(k² − 1) / (2k + 1)⌉.
fn fraction_term(k: u128) -> u128 {
    let num = 8u128.saturating_mul(k).saturating_mul(k.saturating_mul(k).saturating_sub(1));
    num.div_ceil(2 * k + 1)
}

fn to_u64(v: u128) -> u64 {
    u64::try_from(v).unwrap_or(u64::MAX)
}

fn add(a: BoundValue, b: u128) -> BoundValue {
    BoundValue { value: a.value.saturating_add(b), exact: a.exact }
}

impl RamseyTable {
    /// Evaluates a threshold. `params` holds `k` and, where needed, `l`.
    /// The result is exact when every Ramsey value it uses is exact.
    pub fn threshold(&self, t: Threshold, params: &[u64]) -> Result<BoundValue, RamseyError> {
        if params.len() != t.arity() {
            return Err(RamseyError::Parameter {
                name: t.name(),
                requirement: match t.arity() {
                    0 => "no parameters",
                    1 => "exactly one parameter k",
                    _ => "exactly two parameters k and l",
                },
            });
        }
        let k = params.first().copied().unwrap_or(0);
        let l = params.get(1).copied().unwrap_or(0);
        let need = |ok: bool, requirement: &'static str| {
            if ok {
                Ok(())
            } else {
                Err(RamseyError::Parameter { name: t.name(), requirement })
            }
        };
        let kk = k as u128;
        Ok(match t {
            Threshold::BipartiteKK1K2 => {
                need(k >= 2, "k >= 2")?;
                self.bipartite(k)?
            }
            Threshold::Indep5 => self.ramsey(5, 3)?,
            Threshold::MultipartiteClique => {
                need(k >= 1 && l >= 1, "k >= 1 and l >= 1")?;
                BoundValue { value: (kk - 1) * (l as u128 - 1) + 1, exact: true }
            }
            Threshold::MnSplit => {
                need(k >= 2, "k >= 2")?;
                let n = self.bipartite(k)?;
                let value = n.value.saturating_mul(kk - 2).saturating_add(5).saturating_sub(2 * kk);
                BoundValue { value, exact: n.exact }
            }
            Threshold::OmegaKK1K2Z1 => {
                need(k >= 3, "k >= 3")?;
                let r = self.ramsey(k - 1, 3)?;
                let inner = r.value.saturating_add(fraction_term(kk)).saturating_add(2 * kk);
                BoundValue { value: (kk - 1).saturating_mul(inner).saturating_add(2), exact: r.exact }
            }
            Threshold::OmegaKK1K2D => {
                need(k >= 3, "k >= 3")?;
                let inner = add(self.ramsey(k, k)?, kk);
                let outer = self.ramsey(2 * k, to_u64(inner.value))?;
                BoundValue { value: outer.value, exact: inner.exact && outer.exact }
            }
            Threshold::OmegaCo => {
                need(k >= 3 && l >= 2, "k >= 3 and l >= 2")?;
                let inner = self.l5_omega(k, l)?;
                let outer = self.ramsey(k + 1, to_u64(inner.value))?;
                BoundValue { value: outer.value, exact: inner.exact && outer.exact }
            }
            Threshold::L5Omega => {
                need(k >= 3 && l >= 2, "k >= 3 and l >= 2")?;
                self.l5_omega(k, l)?
            }
        })
    }

    fn bipartite(&self, k: u64) -> Result<BoundValue, RamseyError> {
        let kk = k as u128;
        Ok(add(self.ramsey(k - 1, 3)?, fraction_term(kk).saturating_add(2 * kk + 2)))
    }

    fn l5_omega(&self, k: u64, l: u64) -> Result<BoundValue, RamseyError> {
        let m = k * (l - 1);
        Ok(add(self.ramsey(k, m)?, m as u128))
    }
}

/// A threshold from the built-in table.
pub fn threshold(t: Threshold, params: &[u64]) -> Result<BoundValue, RamseyError> {
    RamseyTable::default().threshold(t, params)
}
