//! A small expression language for skew elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '∘' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := number | x<i> | x[k,i] | '(' expr ')'
//!         | phi(c, ...) | ddiff(s, ...) | s(s, ...) | sym(expr) | orbit(expr)
//! ```
//!
//! Numbers may be fractions or decimals, `s` indices are 1-based simple reflections, `*` and `∘`
//! are both the skew product, and `/` only divides by a coefficient with an invertible
//! factored form.

use std::sync::Arc;

use crate::arith::{parse_scalar, Frf, Polynomial, Scalar};
use crate::error::{Error, Result};
use crate::groups::ReflectionGroup;
use crate::skew::{divided_diff_of_word, SkewElement};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == '.') {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect()));
        } else if c.is_alphabetic() && c != '∘' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') && cs[i] != '∘' {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()[],∘".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    group: &'a Arc<ReflectionGroup>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{c}' at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<SkewElement> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SkewElement> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') || self.eat('∘') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = &acc * &self.invert(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn invert(&self, d: &SkewElement) -> Result<SkewElement> {
        let zero = vec![Scalar::from_integer(0.into()); self.group.dim()];
        let c = match (d.num_terms(), d.coefficient(0, &zero)) {
            (1, Some(c)) => c.clone(),
            _ => return Err(Error::Parse("can only divide by a coefficient".into())),
        };
        Ok(SkewElement::coeff(self.group, c.inv()?))
    }

    fn unary(&mut self) -> Result<SkewElement> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        let base = self.atom()?;
        if self.eat('^') {
            let k = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => n.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {n}")))?,
                _ => return Err(Error::Parse("expected exponent".into())),
            };
            self.pos += 1;
            return Ok((0..k).fold(SkewElement::identity(self.group), |acc, _| &acc * &base));
        }
        Ok(base)
    }

    fn scalar_list(&mut self) -> Result<Vec<Scalar>> {
        self.expect('(')?;
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            let neg = self.eat('-');
            let v = match self.toks.get(self.pos) {
                Some(Tok::Num(n)) => parse_scalar(n)?,
                _ => return Err(Error::Parse("expected a number".into())),
            };
            self.pos += 1;
            let v = if self.eat('/') {
                let d = match self.toks.get(self.pos) {
                    Some(Tok::Num(n)) => parse_scalar(n)?,
                    _ => return Err(Error::Parse("expected a denominator".into())),
                };
                self.pos += 1;
                v / d
            } else {
                v
            };
            out.push(if neg { -v } else { v });
            if self.eat(')') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn word(&mut self) -> Result<Vec<usize>> {
        let rank = self.group.rank();
        self.scalar_list()?
            .into_iter()
            .map(|s| {
                let i = s.to_integer();
                let i: usize = i.try_into().map_err(|_| Error::Parse("bad reflection index".into()))?;
                if i == 0 || i > rank || !s.is_integer() {
                    return Err(Error::Parse(format!("reflection index {s} outside 1..={rank}")));
                }
                Ok(i - 1)
            })
            .collect()
    }

    fn var(&mut self, name: &str) -> Result<Polynomial> {
        let l = self.group.layout();
        if name == "x" && self.eat('[') {
            let mut idx = Vec::new();
            loop {
                match self.toks.get(self.pos) {
                    Some(Tok::Num(n)) => idx.push(n.parse::<usize>().map_err(|_| Error::Parse(format!("bad index {n}")))?),
                    _ => return Err(Error::Parse("expected an index".into())),
                }
                self.pos += 1;
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
            if idx.len() != 2 || idx[0] == 0 || idx[1] == 0 || idx[0] > l.num_rows() || idx[1] > l.row_sizes()[idx[0] - 1] {
                return Err(Error::Parse(format!("no variable x{idx:?} in this layout")));
            }
            return Ok(Polynomial::var(l, l.index(idx[0] - 1, idx[1] - 1)));
        }
        let i: usize = name[1..].parse().map_err(|_| Error::Parse(format!("unknown identifier {name}")))?;
        if i == 0 || i > l.dim() {
            return Err(Error::Parse(format!("variable {name} outside x1..x{}", l.dim())));
        }
        Ok(Polynomial::var(l, i - 1))
    }

    fn atom(&mut self) -> Result<SkewElement> {
        let g = self.group;
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(SkewElement::coeff(g, Frf::constant(g.layout(), parse_scalar(&n)?)))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                match id.as_str() {
                    "phi" => {
                        let s = self.scalar_list()?;
                        if s.len() != g.dim() {
                            return Err(Error::DimensionMismatch { expected: g.dim(), got: s.len() });
                        }
                        Ok(SkewElement::translation(g, s))
                    }
                    "ddiff" => Ok(divided_diff_of_word(g, &self.word()?)),
                    "s" => {
                        let w = self.word()?;
                        Ok(SkewElement::group_elem(g, g.from_word(&w)?))
                    }
                    "sym" | "orbit" => {
                        self.expect('(')?;
                        let e = self.expr()?;
                        self.expect(')')?;
                        Ok(if id == "sym" { e.symmetrize() } else { e.orbit_sum() })
                    }
                    _ if id.starts_with('x') => Ok(SkewElement::poly(g, self.var(&id)?)),
                    _ => Err(Error::Parse(format!("unknown identifier {id}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_skew(group: &Arc<ReflectionGroup>, src: &str) -> Result<SkewElement> {
    let mut p = Parser { toks: lex(src)?, pos: 0, group };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Parses an expression that must reduce to a polynomial coefficient.
pub fn parse_poly(group: &Arc<ReflectionGroup>, src: &str) -> Result<Polynomial> {
    let e = parse_skew(group, src)?;
    let zero = vec![Scalar::from_integer(0.into()); group.dim()];
    if e.is_zero() {
        return Ok(Polynomial::zero(group.layout()));
    }
    match (e.num_terms(), e.coefficient(0, &zero)) {
        (1, Some(c)) => c.as_polynomial().cloned().ok_or_else(|| Error::Parse(format!("{src} is not a polynomial"))),
        _ => Err(Error::Parse(format!("{src} is not a polynomial"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int};
    use crate::groups::RootSystem;
    use crate::skew::{divided_diff_word, GzGenerators};

    fn s2() -> Arc<ReflectionGroup> {
        ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap()
    }

    #[test]
    fn polynomials_and_shifts() {
        let g = s2();
        let x = |i| Polynomial::var(g.layout(), i);
        assert_eq!(parse_poly(&g, "3*x2^2 - x1").unwrap(), &x(1).pow(2).scale(&int(3)) - &x(0));
        let a = parse_skew(&g, "x1 * phi(1/2, -1)").unwrap();
        assert_eq!(a, SkewElement::term(&g, x(0).into(), 0, vec![frac(1, 2), int(-1)]));
        assert_eq!(parse_skew(&g, "phi(1,0) ∘ phi(-1,0)").unwrap(), SkewElement::identity(&g));
    }

    #[test]
    fn divided_differences_and_division() {
        let g = s2();
        assert_eq!(parse_skew(&g, "ddiff(1)").unwrap(), divided_diff_word(&g, g.simple_reflection(0)));
        let manual = parse_skew(&g, "1/(x1 - x2) - 1/(x1 - x2) * s(1)").unwrap();
        assert_eq!(manual, divided_diff_word(&g, g.simple_reflection(0)));
        assert_eq!(parse_skew(&g, "sym(1)").unwrap(), SkewElement::identity(&g).scale(&int(2)));
        assert!(parse_skew(&g, "1/(x1*x2)").is_err());
    }

    #[test]
    fn staircase_variables() {
        let gz = GzGenerators::new(2).unwrap();
        let e11 = parse_skew(&gz.group, "x[1,1]").unwrap();
        assert_eq!(&e11, gz.get(1, 1));
        assert!(parse_skew(&gz.group, "x[3,1]").is_err());
    }

    #[test]
    fn errors() {
        let g = s2();
        assert!(matches!(parse_skew(&g, "x3"), Err(Error::Parse(_))));
        assert!(matches!(parse_skew(&g, "phi(1)"), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(parse_skew(&g, "x1 +"), Err(Error::Parse(_))));
        assert!(matches!(parse_skew(&g, "ddiff(2)"), Err(Error::Parse(_))));
    }
}
