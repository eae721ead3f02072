//! Expression syntax for field elements, quaternions and ideals.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! name   := eta | tau | i | j | ij | jp | g2 | g3 | g7
//! ```
//!
//! Division is only allowed by nonzero central values. A rational `a/b` is
//! just a division of integers.

use hurwitz_core::group::generators::{g2, g3, g7};
use hurwitz_core::{FieldElem, IdealK, QuatElem};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by a non-central or zero value at position {pos}")]
    NonCentralDivision { pos: usize },
    #[error("expected a field element, found a quaternion")]
    NotCentral,
    #[error("invalid ideal: {0}")]
    Ideal(String),
}

/// A parsed value: central values stay field elements.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Parsed {
    Field(FieldElem),
    Quat(QuatElem),
}

impl Parsed {
    pub fn into_quat(self) -> QuatElem {
        match self {
            Parsed::Field(x) => QuatElem::scalar(x),
            Parsed::Quat(q) => q,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            out.push((start, Tok::Num(text.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '\'') {
                k += 1;
            }
            out.push((start, Tok::Name(chars[start..k].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Op(c)));
            k += 1;
        } else {
            return Err(ParseError::Syntax {
                pos: k,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    quaternionic: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.offset(),
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<QuatElem, ParseError> {
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

    fn term(&mut self) -> Result<QuatElem, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.offset();
                self.pos += 1;
                let d = self.unary()?;
                if !d.is_scalar() || d.is_zero() {
                    return Err(ParseError::NonCentralDivision { pos });
                }
                let inv =
                    d.a.inverse()
                        .map_err(|_| ParseError::NonCentralDivision { pos })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<QuatElem, ParseError> {
        if self.eat('-') {
            let x = self.unary()?;
            return Ok(&QuatElem::zero() - &x);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QuatElem, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    u32::try_from(n).map_err(|_| self.syntax("exponent too large"))?
                }
                _ => return Err(self.syntax("expected a nonnegative integer exponent")),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<QuatElem, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(QuatElem::scalar(FieldElem::from_rational(
                    BigRational::from_integer(n),
                )))
            }
            Some(Tok::Name(name)) => {
                let v = match name.as_str() {
                    "eta" => QuatElem::scalar(FieldElem::eta()),
                    "tau" => QuatElem::scalar(FieldElem::tau()),
                    other => {
                        let q = match other {
                            "i" => QuatElem::i(),
                            "j" => QuatElem::j(),
                            "ij" => QuatElem::ij(),
                            "jp" | "j'" => QuatElem::j_prime(),
                            "g2" => g2(),
                            "g3" => g3(),
                            "g7" => g7(),
                            _ => return Err(self.syntax(&format!("unknown name '{other}'"))),
                        };
                        self.quaternionic = true;
                        q
                    }
                };
                self.pos += 1;
                Ok(v)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(self.syntax("expected ')'"));
                }
                Ok(v)
            }
            Some(_) => Err(self.syntax("expected a number, a name or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

/// Parses an expression; the result is a field element when no quaternion
/// unit appears in it.
pub fn parse_element(text: &str) -> Result<Parsed, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        quaternionic: false,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.syntax("trailing input"));
    }
    if p.quaternionic {
        Ok(Parsed::Quat(v))
    } else {
        Ok(Parsed::Field(v.a))
    }
}

pub fn parse_quat(text: &str) -> Result<QuatElem, ParseError> {
    parse_element(text).map(Parsed::into_quat)
}

pub fn parse_field(text: &str) -> Result<FieldElem, ParseError> {
    match parse_element(text)? {
        Parsed::Field(x) => Ok(x),
        Parsed::Quat(q) if q.is_scalar() => Ok(q.a),
        Parsed::Quat(_) => Err(ParseError::NotCentral),
    }
}

/// Parses `<gen>` or a bare generator.
pub fn parse_ideal(text: &str) -> Result<IdealK, ParseError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .unwrap_or(t);
    let g = parse_field(inner)?;
    IdealK::new(g).map_err(|e| ParseError::Ideal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j_prime_and_relations() {
        assert_eq!(
            parse_quat("(1 + eta*i + tau*j)/2").unwrap(),
            QuatElem::j_prime()
        );
        assert_eq!(
            parse_quat("i*j - j*i").unwrap(),
            QuatElem::ij().scale(&FieldElem::from_int(2))
        );
        assert_eq!(
            parse_element("eta^3 + eta^2 - 2*eta - 1").unwrap(),
            Parsed::Field(FieldElem::zero())
        );
        assert_eq!(
            parse_field("3/4 - eta").unwrap(),
            FieldElem::from_ints(0, -1, 0) + FieldElem::from_fraction(3, 4)
        );
        assert_eq!(
            parse_ideal("<2 - eta>").unwrap(),
            IdealK::new(FieldElem::from_ints(2, -1, 0)).unwrap()
        );
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_element("1 / i"),
            Err(ParseError::NonCentralDivision { pos: 2 })
        );
        assert_eq!(
            parse_element("1 / (eta - eta)"),
            Err(ParseError::NonCentralDivision { pos: 2 })
        );
        assert!(matches!(
            parse_element("1 + "),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_element("2 $ 3"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_element("foo"),
            Err(ParseError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_element("(1"),
            Err(ParseError::Syntax { .. })
        ));
        assert_eq!(parse_field("i"), Err(ParseError::NotCentral));
        assert!(parse_ideal("<0>").is_err());
    }

    #[test]
    fn displays_round_trip() {
        for q in [QuatElem::j_prime(), g2(), g3(), g7()] {
            assert_eq!(parse_quat(&q.to_string()).unwrap(), q);
        }
        let x = FieldElem::from_ints(3, -7, 2) + FieldElem::from_fraction(-1, 3);
        assert_eq!(parse_field(&x.to_string()).unwrap(), x);
    }
}
