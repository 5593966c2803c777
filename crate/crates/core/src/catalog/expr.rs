//! Group expressions such as `Z(2)xZ(6)`, `SD(16)` or `cayley:table.csv`.
//!
//! ```text
//! Expr := Term ('x' Term)*
//! Term := NAME '(' int (',' int)* ')' | 'cayley:' path | 'G16(' int ')'
//! NAME := Z | D | Q | SD | M | S | A | Heis
//! ```
//!
//! `x` is the direct product and associates to the left. Whitespace between
//! tokens is ignored. A Cayley path runs up to the next whitespace, so a
//! product involving a file needs spaces: `cayley:g.csv x Z(2)`.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use super::perm::PermGenerators;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    GeneralizedQuaternion(usize),
    Semidihedral(usize),
    ModularGroup(usize, usize),
    Heisenberg(usize),
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Box<GroupExpr>, Box<GroupExpr>),
    FromCayleyFile(PathBuf),
    FromPermutations(PermGenerators),
    Order16(usize),
}

impl GroupExpr {
    pub fn product(left: GroupExpr, right: GroupExpr) -> GroupExpr {
        GroupExpr::DirectProduct(Box::new(left), Box::new(right))
    }

    fn ends_with_path(&self) -> bool {
        match self {
            GroupExpr::FromCayleyFile(_) => true,
            GroupExpr::DirectProduct(_, b) => b.ends_with_path(),
            _ => false,
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "Z({n})"),
            GroupExpr::Dihedral(n) => write!(f, "D({n})"),
            GroupExpr::GeneralizedQuaternion(n) => write!(f, "Q({n})"),
            GroupExpr::Semidihedral(n) => write!(f, "SD({n})"),
            GroupExpr::ModularGroup(p, n) => write!(f, "M({p},{n})"),
            GroupExpr::Heisenberg(p) => write!(f, "Heis({p})"),
            GroupExpr::Symmetric(n) => write!(f, "S({n})"),
            GroupExpr::Alternating(n) => write!(f, "A({n})"),
            GroupExpr::DirectProduct(a, b) => {
                if a.ends_with_path() {
                    write!(f, "{a} x ")?;
                } else {
                    write!(f, "{a}x")?;
                }
                if matches!(**b, GroupExpr::DirectProduct(..)) {
                    // not expressible in the grammar; printed for diagnostics only
                    write!(f, "[{b}]")
                } else {
                    write!(f, "{b}")
                }
            }
            GroupExpr::FromCayleyFile(p) => write!(f, "cayley:{}", p.display()),
            GroupExpr::FromPermutations(g) => write!(f, "Perm({}; {:?})", g.degree, g.generators),
            GroupExpr::Order16(k) => write!(f, "G16({k})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: expected {expected}")]
    SyntaxError { position: usize, expected: String },
    #[error("unknown constructor '{name}' at position {position}")]
    UnknownConstructor { name: String, position: usize },
    #[error("{name} takes {expected} argument(s), got {found}")]
    ArityError {
        name: String,
        expected: usize,
        found: usize,
    },
}

pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let mut p = Parser {
        src: text.as_bytes(),
        text,
        pos: 0,
    };
    let mut expr = p.term()?;
    loop {
        p.skip_ws();
        match p.peek() {
            None => return Ok(expr),
            Some(b'x') => {
                p.pos += 1;
                let rhs = p.term()?;
                expr = GroupExpr::product(expr, rhs);
            }
            Some(_) => return Err(p.expected("'x' or end of input")),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expected(&self, what: &str) -> ParseError {
        ParseError::SyntaxError {
            position: self.pos,
            expected: what.into(),
        }
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.expected(&format!("'{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos].parse().map_err(|_| {
            self.pos = start;
            self.expected("integer")
        })
    }

    fn term(&mut self) -> Result<GroupExpr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.text[start..].starts_with("cayley:") {
            self.pos += "cayley:".len();
            let path_start = self.pos;
            while self.peek().is_some_and(|c| !c.is_ascii_whitespace()) {
                self.pos += 1;
            }
            if self.pos == path_start {
                return Err(self.expected("path"));
            }
            return Ok(GroupExpr::FromCayleyFile(PathBuf::from(
                &self.text[path_start..self.pos],
            )));
        }
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(self.expected("Term"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        let name = &self.text[start..self.pos];
        let arity = match name {
            "Z" | "D" | "Q" | "SD" | "S" | "A" | "Heis" | "G16" => 1,
            "M" => 2,
            _ => {
                return Err(ParseError::UnknownConstructor {
                    name: name.into(),
                    position: start,
                })
            }
        };
        self.eat(b'(')?;
        let mut args = vec![self.int()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    args.push(self.int()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.expected("',' or ')'")),
            }
        }
        if args.len() != arity {
            return Err(ParseError::ArityError {
                name: name.into(),
                expected: arity,
                found: args.len(),
            });
        }
        let a = args[0];
        Ok(match name {
            "Z" => GroupExpr::Cyclic(a),
            "D" => GroupExpr::Dihedral(a),
            "Q" => GroupExpr::GeneralizedQuaternion(a),
            "SD" => GroupExpr::Semidihedral(a),
            "S" => GroupExpr::Symmetric(a),
            "A" => GroupExpr::Alternating(a),
            "Heis" => GroupExpr::Heisenberg(a),
            "G16" => GroupExpr::Order16(a),
            "M" => GroupExpr::ModularGroup(a, args[1]),
            _ => unreachable!(),
        })
    }
}
