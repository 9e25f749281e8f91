//! Group-construction expressions.
//!
//! ```text
//! expr    := factor (('x' | '×') factor)*
//! factor  := 'C' n ':' 'C' n ['[' n ']']      semidirect C_q ⋊ C_d, twist r
//!          | atom
//! atom    := '(' expr ')'
//!          | 'C' n | 'D' n | 'Q' n | 'Dic' n | 'S' n | 'Alt' n | 'He' n
//!          | 'A' '(' n (',' n)* ')'
//!          | 'cayley:' path | 'perm:' path
//! n       := digits | '(' digits ')'
//! ```
//!
//! `D`, `Q` and `Dic` take the group order (`D8` is the dihedral group of
//! order 8); `He p` is the Heisenberg group of order `p³`. Paths run to the
//! next whitespace character.

use std::fmt;
use std::path::PathBuf;

use crate::error::{GroupError, SpecError};
use crate::group::{io, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Abelian(Vec<usize>),
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Generalized quaternion group of the given order.
    Quaternion(usize),
    /// Dicyclic group of the given order.
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    Heisenberg(usize),
    CyclicSemidirect { q: usize, d: usize, r: Option<usize> },
    Product(Box<GroupSpec>, Box<GroupSpec>),
    CayleyFile(PathBuf),
    PermFile(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Abelian(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "A({})", parts.join(","))
            }
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupSpec::Symmetric(d) => write!(f, "S{d}"),
            GroupSpec::Alternating(d) => write!(f, "Alt{d}"),
            GroupSpec::Heisenberg(p) => write!(f, "He{p}"),
            GroupSpec::CyclicSemidirect { q, d, r: None } => write!(f, "C{q}:C{d}"),
            GroupSpec::CyclicSemidirect { q, d, r: Some(r) } => write!(f, "C{q}:C{d}[{r}]"),
            GroupSpec::Product(a, b) => match **b {
                GroupSpec::Product(..) => write!(f, "{a}x({b})"),
                _ => write!(f, "{a}x{b}"),
            },
            GroupSpec::CayleyFile(p) => write!(f, "cayley:{}", p.display()),
            GroupSpec::PermFile(p) => write!(f, "perm:{}", p.display()),
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, expected: &str) -> Result<T, SpecError> {
        Err(SpecError::Syntax {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().copied().eq(s.chars()) {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("'{c}'"))
        }
    }

    fn digits(&mut self) -> Result<usize, SpecError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("a number");
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("a number that fits in a machine word")
        })
    }

    fn number(&mut self) -> Result<usize, SpecError> {
        if self.peek() == Some('(') {
            self.pos += 1;
            self.skip_ws();
            let n = self.digits()?;
            self.expect(')')?;
            Ok(n)
        } else {
            self.digits()
        }
    }

    fn path(&mut self) -> Result<PathBuf, SpecError> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| !c.is_whitespace()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("a file path");
        }
        Ok(PathBuf::from(self.chars[start..self.pos].iter().collect::<String>()))
    }

    fn expr(&mut self) -> Result<GroupSpec, SpecError> {
        let mut lhs = self.factor()?;
        while matches!(self.peek(), Some('x' | '×')) {
            self.pos += 1;
            let rhs = self.factor()?;
            lhs = GroupSpec::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<GroupSpec, SpecError> {
        let atom = self.atom()?;
        if self.peek() != Some(':') {
            return Ok(atom);
        }
        let GroupSpec::Cyclic(q) = atom else {
            return self.err("'x' or end of input (':' only follows a cyclic factor)");
        };
        self.pos += 1;
        if !self.eat_str("C") {
            return self.err("'C' after ':'");
        }
        self.skip_ws();
        let d = self.number()?;
        let r = if self.peek() == Some('[') {
            self.pos += 1;
            self.skip_ws();
            let r = self.digits()?;
            self.expect(']')?;
            Some(r)
        } else {
            None
        };
        Ok(GroupSpec::CyclicSemidirect { q, d, r })
    }

    fn atom(&mut self) -> Result<GroupSpec, SpecError> {
        const EXPECTED: &str = "a group expression (C, A(..), D, Q, Dic, S, Alt, He, cayley:, perm: or '(')";
        match self.peek() {
            None => return self.err(EXPECTED),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                return Ok(inner);
            }
            _ => {}
        }
        if self.eat_str("cayley:") {
            return Ok(GroupSpec::CayleyFile(self.path()?));
        }
        if self.eat_str("perm:") {
            return Ok(GroupSpec::PermFile(self.path()?));
        }
        // longer names first
        let families: [(&str, fn(usize) -> GroupSpec); 7] = [
            ("Dic", GroupSpec::Dicyclic),
            ("Alt", GroupSpec::Alternating),
            ("He", GroupSpec::Heisenberg),
            ("C", GroupSpec::Cyclic),
            ("D", GroupSpec::Dihedral),
            ("Q", GroupSpec::Quaternion),
            ("S", GroupSpec::Symmetric),
        ];
        for (name, make) in families {
            if self.eat_str(name) {
                self.skip_ws();
                return Ok(make(self.number()?));
            }
        }
        if self.eat_str("A") {
            self.expect('(')?;
            self.skip_ws();
            let mut parts = vec![self.digits()?];
            while self.peek() == Some(',') {
                self.pos += 1;
                self.skip_ws();
                parts.push(self.digits()?);
            }
            self.expect(')')?;
            return Ok(GroupSpec::Abelian(parts));
        }
        self.err(EXPECTED)
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let spec = p.expr()?;
    if p.peek().is_some() {
        return p.err("'x' or end of input");
    }
    Ok(spec)
}

fn check_cap(g: GroupTable, cap: usize) -> Result<GroupTable, GroupError> {
    if g.order() > cap {
        Err(GroupError::OrderCapExceeded {
            cap,
            reached: g.order(),
        })
    } else {
        Ok(g)
    }
}

fn pre_cap(order: usize, cap: usize) -> Result<(), GroupError> {
    if order > cap {
        Err(GroupError::OrderCapExceeded { cap, reached: order })
    } else {
        Ok(())
    }
}

fn positive(n: usize, what: &str) -> Result<usize, GroupError> {
    if n == 0 {
        Err(GroupError::InvalidParameter(format!("{what} must be positive")))
    } else {
        Ok(n)
    }
}

impl GroupSpec {
    /// Order of the group, when it is known without building it.
    pub fn nominal_order(&self) -> Option<usize> {
        Some(match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Quaternion(n) | GroupSpec::Dicyclic(n) => *n,
            GroupSpec::Abelian(parts) => parts.iter().try_fold(1usize, |a, &p| a.checked_mul(p))?,
            GroupSpec::Symmetric(d) => (1..=*d).try_fold(1usize, |a, k| a.checked_mul(k))?,
            GroupSpec::Alternating(d) => {
                let f = (1..=*d).try_fold(1usize, |a, k| a.checked_mul(k))?;
                if *d >= 2 {
                    f / 2
                } else {
                    f
                }
            }
            GroupSpec::Heisenberg(p) => p.checked_mul(*p)?.checked_mul(*p)?,
            GroupSpec::CyclicSemidirect { q, d, .. } => q.checked_mul(*d)?,
            GroupSpec::Product(a, b) => a.nominal_order()?.checked_mul(b.nominal_order()?)?,
            GroupSpec::CayleyFile(_) | GroupSpec::PermFile(_) => return None,
        })
    }

    /// Builds the group; every intermediate and final order is bounded by `cap`.
    pub fn evaluate(&self, cap: usize) -> Result<GroupTable, GroupError> {
        if let Some(n) = self.nominal_order() {
            pre_cap(n, cap)?;
        }
        let label = self.to_string();
        let g = match self {
            GroupSpec::Cyclic(n) => GroupTable::cyclic(positive(*n, "cyclic order")?),
            GroupSpec::Abelian(parts) => GroupTable::abelian(parts, cap)?,
            GroupSpec::Dihedral(n) => {
                if *n < 2 || n % 2 != 0 {
                    return Err(GroupError::InvalidParameter(format!(
                        "dihedral order must be even and at least 2, got {n}"
                    )));
                }
                GroupTable::dihedral(n / 2)
            }
            GroupSpec::Quaternion(n) => {
                if *n < 8 || !n.is_power_of_two() {
                    return Err(GroupError::InvalidParameter(format!(
                        "generalized quaternion order must be a power of two >= 8, got {n}"
                    )));
                }
                GroupTable::generalized_quaternion(n.trailing_zeros())?
            }
            GroupSpec::Dicyclic(n) => {
                if *n < 4 || n % 4 != 0 {
                    return Err(GroupError::InvalidParameter(format!(
                        "dicyclic order must be a positive multiple of 4, got {n}"
                    )));
                }
                GroupTable::dicyclic(n / 4)?
            }
            GroupSpec::Symmetric(d) => GroupTable::symmetric(*d, cap)?,
            GroupSpec::Alternating(d) => GroupTable::alternating(*d, cap)?,
            GroupSpec::Heisenberg(p) => GroupTable::heisenberg(*p)?,
            GroupSpec::CyclicSemidirect { q, d, r } => GroupTable::cyclic_semidirect(*q, *d, *r)?,
            GroupSpec::Product(a, b) => {
                let a = a.evaluate(cap)?;
                let b = b.evaluate(cap)?;
                GroupTable::direct_product(&a, &b, cap)?
            }
            GroupSpec::CayleyFile(path) => check_cap(io::load_cayley(path)?, cap)?,
            GroupSpec::PermFile(path) => io::load_perm_group(path, cap)?,
        };
        Ok(g.with_label(label))
    }
}

/// Parses and evaluates in one step.
pub fn build_group(text: &str, cap: usize) -> Result<GroupTable, SpecError> {
    let spec = parse_spec(text)?;
    spec.evaluate(cap).map_err(|error| SpecError::Eval {
        source_text: text.to_string(),
        error,
    })
}
