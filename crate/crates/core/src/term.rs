//! ω-terms: letters, concatenation, positive integer powers and ω-powers.
//!
//! Concrete syntax (whitespace is ignored):
//!
//! ```text
//! expr   := factor+
//! factor := atom ['^' (integer | 'w')]
//! atom   := letter | '(' expr ')'
//! ```
//!
//! `w` after `^` stands for ω. Exponents start at 1.

use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use crate::monoid::{Elem, FiniteMonoid, GeneratorMap};
use crate::{MonoError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OmegaTerm {
    Letter(char),
    Concat(Vec<OmegaTerm>),
    Power(Box<OmegaTerm>, u64),
    OmegaPower(Box<OmegaTerm>),
}

impl OmegaTerm {
    pub fn letter(c: char) -> OmegaTerm {
        OmegaTerm::Letter(c)
    }

    pub fn power(t: OmegaTerm, k: u64) -> OmegaTerm {
        OmegaTerm::Power(Box::new(t), k)
    }

    pub fn omega(t: OmegaTerm) -> OmegaTerm {
        OmegaTerm::OmegaPower(Box::new(t))
    }

    /// Homomorphic evaluation; ω-powers go through [`FiniteMonoid::omega_power`].
    pub fn evaluate(&self, m: &FiniteMonoid, g: &GeneratorMap) -> Result<Elem> {
        Ok(match self {
            OmegaTerm::Letter(c) => g.image(*c)?,
            OmegaTerm::Concat(ts) => ts
                .iter()
                .try_fold(m.identity(), |acc, t| Ok(m.mul(acc, t.evaluate(m, g)?)))?,
            OmegaTerm::Power(t, k) => m.power(t.evaluate(m, g)?, *k),
            OmegaTerm::OmegaPower(t) => m.omega_power(t.evaluate(m, g)?),
        })
    }

    fn is_atom(&self) -> bool {
        matches!(self, OmegaTerm::Letter(_))
    }
}

pub fn evaluate(t: &OmegaTerm, m: &FiniteMonoid, g: &GeneratorMap) -> Result<Elem> {
    t.evaluate(m, g)
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = |f: &mut fmt::Formatter<'_>, t: &OmegaTerm| {
            if t.is_atom() {
                write!(f, "{t}")
            } else {
                write!(f, "({t})")
            }
        };
        match self {
            OmegaTerm::Letter(c) => write!(f, "{c}"),
            OmegaTerm::Concat(ts) => {
                let mut after_number = false;
                for t in ts {
                    let text = match t {
                        OmegaTerm::Concat(_) => format!("({t})"),
                        _ => t.to_string(),
                    };
                    // keep a digit letter from running into an exponent
                    if after_number && text.starts_with(|c: char| c.is_ascii_digit()) {
                        f.write_str(" ")?;
                    }
                    f.write_str(&text)?;
                    after_number = matches!(t, OmegaTerm::Power(..));
                }
                Ok(())
            }
            OmegaTerm::Power(t, k) => {
                base(f, t)?;
                write!(f, "^{k}")
            }
            OmegaTerm::OmegaPower(t) => {
                base(f, t)?;
                write!(f, "^w")
            }
        }
    }
}

fn is_letter(c: char) -> bool {
    !c.is_whitespace() && !"()^;,|".contains(c)
}

struct Parser<'a> {
    chars: Peekable<CharIndices<'a>>,
    len: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.next_if(|&(_, c)| c.is_whitespace()).is_some() {}
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn error(pos: usize, msg: impl Into<String>) -> MonoError {
        MonoError::TermSyntax {
            pos,
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<OmegaTerm> {
        let mut factors = Vec::new();
        while let Some((_, c)) = self.peek() {
            if c == ')' {
                break;
            }
            factors.push(self.factor()?);
        }
        match factors.len() {
            0 => {
                let pos = self.peek().map_or(self.len, |(p, _)| p);
                Err(Parser::error(pos, "expected a letter or '('"))
            }
            1 => Ok(factors.pop().expect("one factor")),
            _ => Ok(OmegaTerm::Concat(factors)),
        }
    }

    fn factor(&mut self) -> Result<OmegaTerm> {
        let atom = self.atom()?;
        match self.peek() {
            Some((_, '^')) => {
                self.chars.next();
                self.exponent(atom)
            }
            _ => Ok(atom),
        }
    }

    fn exponent(&mut self, atom: OmegaTerm) -> Result<OmegaTerm> {
        match self.peek() {
            Some((_, 'w')) => {
                self.chars.next();
                Ok(OmegaTerm::omega(atom))
            }
            Some((start, c)) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some((_, d)) = self.chars.next_if(|&(_, d)| d.is_ascii_digit()) {
                    digits.push(d);
                }
                let k: u64 = digits
                    .parse()
                    .map_err(|_| Parser::error(start, "exponent too large"))?;
                if k == 0 {
                    return Err(Parser::error(start, "exponent must be at least 1"));
                }
                Ok(OmegaTerm::power(atom, k))
            }
            Some((pos, c)) => Err(Parser::error(pos, format!("expected exponent, found {c:?}"))),
            None => Err(Parser::error(self.len, "expected exponent, found end of input")),
        }
    }

    fn atom(&mut self) -> Result<OmegaTerm> {
        match self.peek() {
            Some((pos, '(')) => {
                self.chars.next();
                let inner = self.expr()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.chars.next();
                        Ok(inner)
                    }
                    _ => Err(Parser::error(pos, "unclosed '('")),
                }
            }
            Some((_, c)) if is_letter(c) => {
                self.chars.next();
                Ok(OmegaTerm::Letter(c))
            }
            Some((pos, c)) => Err(Parser::error(pos, format!("unexpected {c:?}"))),
            None => Err(Parser::error(self.len, "unexpected end of input")),
        }
    }
}

/// Parses an ω-term; error positions are byte offsets into `text`.
pub fn parse_term(text: &str) -> Result<OmegaTerm> {
    let mut p = Parser {
        chars: text.char_indices().peekable(),
        len: text.len(),
    };
    let t = p.expr()?;
    match p.peek() {
        None => Ok(t),
        Some((pos, c)) => Err(Parser::error(pos, format!("unexpected {c:?}"))),
    }
}
