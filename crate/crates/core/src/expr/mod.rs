//! Graph expressions such as `2K1+K2`, `co(K3+P4)` or `K1,3`.
//!
//! Grammar (ASCII whitespace may appear between tokens):
//!
//! ```text
//! expr  := term ('+' term)*
//! term  := [int] atom | 'co(' expr ')'
//! atom  := 'K' int (',' int)* | 'P' int | 'C' int | name
//! name  := 'D' | 'Z1' | 'Z2' | 'chair' | 'gem'
//! ```
//!
//! `+` is disjoint union and an integer prefix is a multiplicity. `K` with a
//! single parameter is a complete graph, with several a complete multipartite
//! graph.

pub mod catalog;
mod recognize;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use crate::graph::{decode_graph6, encode_graph6, Graph6Error};
pub use recognize::{recognize, NamedForm};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Path(usize),
    Cycle(usize),
    Named(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Atom(Atom),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Multiple(usize, Box<GraphExpr>),
    Complement(Box<GraphExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: &'static str },
    #[error("unknown graph name '{name}' at position {position}")]
    UnknownName { position: usize, name: String },
    #[error("zero multiplicity at position {0}")]
    ZeroMultiplicity(usize),
    #[error("parameter out of range at position {position}: {reason}")]
    Parameter { position: usize, reason: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses and evaluates in one step.
pub fn build(text: &str) -> Result<Graph, ExprError> {
    eval_expr(&parse_expr(text)?)
}

pub fn parse_expr(text: &str) -> Result<GraphExpr, ExprError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.syntax("'+' or end of input"));
    }
    Ok(e)
}

pub fn eval_expr(e: &GraphExpr) -> Result<Graph, ExprError> {
    Ok(match e {
        GraphExpr::Atom(a) => match a {
            Atom::Complete(n) => catalog::complete(*n)?,
            Atom::CompleteMultipartite(parts) => catalog::complete_multipartite(parts)?,
            Atom::Path(n) => catalog::path(*n)?,
            Atom::Cycle(n) => catalog::cycle(*n)?,
            Atom::Named(name) => catalog::by_name(name).expect("parser only admits catalog names"),
        },
        GraphExpr::Union(a, b) => eval_expr(a)?.disjoint_union(&eval_expr(b)?)?,
        GraphExpr::Multiple(k, a) => {
            let one = eval_expr(a)?;
            if one.order() * k > crate::graph::MAX_ORDER {
                return Err(GraphError::OrderTooLarge(one.order() * k).into());
            }
            let mut g = Graph::empty(0)?;
            for _ in 0..*k {
                g = g.disjoint_union(&one)?;
            }
            g
        }
        GraphExpr::Complement(a) => eval_expr(a)?.complement(),
    })
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn syntax(&self, expected: &'static str) -> ExprError {
        ExprError::Syntax { position: self.pos, expected }
    }

    fn expr(&mut self) -> Result<GraphExpr, ExprError> {
        let mut left = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            let right = self.term()?;
            left = GraphExpr::Union(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<GraphExpr, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let k = self.int()?;
                if k == 0 {
                    return Err(ExprError::ZeroMultiplicity(at));
                }
                let atom = self.atom()?;
                Ok(if k == 1 { atom } else { GraphExpr::Multiple(k, Box::new(atom)) })
            }
            Some(_) if self.s[self.pos..].starts_with(b"co") => {
                let after = self.pos + 2;
                self.pos = after;
                if self.peek() != Some(b'(') {
                    self.pos = after - 2;
                    return self.atom();
                }
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("')'"));
                }
                self.pos += 1;
                Ok(GraphExpr::Complement(Box::new(inner)))
            }
            Some(_) => self.atom(),
            None => Err(self.syntax("a graph")),
        }
    }

    fn int(&mut self) -> Result<usize, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("digits")
            .parse()
            .map_err(|_| ExprError::Parameter { position: start, reason: "integer too large" })
    }

    fn atom(&mut self) -> Result<GraphExpr, ExprError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.syntax("a graph")),
        };
        let word_end = start
            + self.s[start..]
                .iter()
                .take_while(|c| c.is_ascii_alphanumeric())
                .count();
        let word = std::str::from_utf8(&self.s[start..word_end]).expect("ASCII");
        if let Some(&name) = catalog::NAMES.iter().find(|&&n| n == word) {
            self.pos = word_end;
            return Ok(GraphExpr::Atom(Atom::Named(name)));
        }
        let family = self.s[start];
        let numeric_tail = word.len() > 1 && word[1..].bytes().all(|c| c.is_ascii_digit());
        if !matches!(family, b'K' | b'P' | b'C') || !numeric_tail {
            if word.is_empty() {
                return Err(self.syntax("a graph"));
            }
            return Err(ExprError::UnknownName { position: start, name: word.to_string() });
        }
        self.pos = start + 1;
        let first = self.int_here()?;
        let atom = match family {
            b'K' => {
                let mut parts = vec![first];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    self.skip_ws();
                    parts.push(self.int_here()?);
                }
                if parts.contains(&0) {
                    return Err(ExprError::Parameter { position: start, reason: "K needs positive sizes" });
                }
                if parts.len() == 1 {
                    Atom::Complete(first)
                } else {
                    Atom::CompleteMultipartite(parts)
                }
            }
            b'P' if first == 0 => {
                return Err(ExprError::Parameter { position: start, reason: "P needs at least one vertex" })
            }
            b'P' => Atom::Path(first),
            _ if first < 3 => {
                return Err(ExprError::Parameter { position: start, reason: "C needs at least three vertices" })
            }
            _ => Atom::Cycle(first),
        };
        Ok(GraphExpr::Atom(atom))
    }

    /// An integer starting exactly at the cursor.
    fn int_here(&mut self) -> Result<usize, ExprError> {
        if !self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Err(self.syntax("an integer"));
        }
        self.int()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Complete(n) => write!(f, "K{n}"),
            Atom::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "K{}", parts.join(","))
            }
            Atom::Path(n) => write!(f, "P{n}"),
            Atom::Cycle(n) => write!(f, "C{n}"),
            Atom::Named(name) => f.write_str(name),
        }
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Atom(a) => write!(f, "{a}"),
            // Right-nested unions print flat; they denote the same graph.
            GraphExpr::Union(a, b) => write!(f, "{a}+{b}"),
            GraphExpr::Multiple(k, a) => match **a {
                GraphExpr::Atom(_) => write!(f, "{k}{a}"),
                _ => {
                    let copies: Vec<String> = (0..*k).map(|_| a.to_string()).collect();
                    f.write_str(&copies.join("+"))
                }
            },
            GraphExpr::Complement(a) => write!(f, "co({a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphic;

    fn atom(a: Atom) -> Box<GraphExpr> {
        Box::new(GraphExpr::Atom(a))
    }

    #[test]
    fn parses_documented_forms() {
        assert_eq!(
            parse_expr("2K1+K2").unwrap(),
            GraphExpr::Union(Box::new(GraphExpr::Multiple(2, atom(Atom::Complete(1)))), atom(Atom::Complete(2)))
        );
        assert_eq!(
            parse_expr("co(K3+P4)").unwrap(),
            GraphExpr::Complement(Box::new(GraphExpr::Union(atom(Atom::Complete(3)), atom(Atom::Path(4)))))
        );
        assert_eq!(parse_expr("K1,3").unwrap(), *atom(Atom::CompleteMultipartite(vec![1, 3])));
        assert_eq!(parse_expr(" co ( K1 + P4 ) ").unwrap(), parse_expr("co(K1+P4)").unwrap());
        assert_eq!(parse_expr("1K3").unwrap(), parse_expr("K3").unwrap());
    }

    #[test]
    fn evaluates() {
        let gem = build("co(K1+P4)").unwrap();
        assert_eq!((gem.order(), gem.edge_count()), (5, 7));
        assert!(isomorphic(&gem, &build("gem").unwrap()));
        assert_eq!(build("3K1").unwrap(), Graph::empty(3).unwrap());
        let chair = build("chair").unwrap();
        assert_eq!((chair.order(), chair.edge_count()), (5, 4));
        assert!(matches!(build("33K2"), Err(ExprError::Graph(GraphError::OrderTooLarge(66)))));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_expr("0K1"), Err(ExprError::ZeroMultiplicity(0)));
        assert_eq!(
            parse_expr("K2+Q3"),
            Err(ExprError::UnknownName { position: 3, name: "Q3".into() })
        );
        assert_eq!(parse_expr("K2+"), Err(ExprError::Syntax { position: 3, expected: "a graph" }));
        assert_eq!(parse_expr("co(K2"), Err(ExprError::Syntax { position: 5, expected: "')'" }));
        assert!(matches!(parse_expr("C2"), Err(ExprError::Parameter { position: 0, .. })));
        assert!(matches!(parse_expr("K1,0"), Err(ExprError::Parameter { .. })));
        assert!(matches!(parse_expr("K1 K2"), Err(ExprError::Syntax { position: 3, .. })));
        assert!(matches!(parse_expr("co"), Err(ExprError::UnknownName { .. })));
        assert!(matches!(parse_expr("2co(K2)"), Err(ExprError::UnknownName { .. })));
    }

    #[test]
    fn display_round_trips() {
        for s in ["2K1+K2", "co(K3+P4)", "K1,3", "co(co(C5)+3D)+gem", "Z1+Z2+chair", "K1,1,2"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }
}
