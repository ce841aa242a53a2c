//! Text format for polynomials.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' uint)?
//! coeff  := int ('/' uint)?
//! ```
//!
//! Whitespace is ignored and variable names are case-insensitive. Output is
//! lowercase with ` + ` / ` - ` separators.

use num_bigint::BigInt;
use num_traits::One;

use super::field::Field;
use super::monomial::Monomial;
use super::poly::{Polynomial, Term};
use super::spec::RingRef;
use crate::error::{AlgebraError, Result};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse { offset: self.pos, message: message.into() })
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphabetic()) {
            return self.err("expected a variable or coefficient");
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string())
    }
}

fn parse_factor(lx: &mut Lexer<'_>, ring: &RingRef, mono: &mut Monomial) -> Result<()> {
    let name = lx.ident()?;
    let var = ring.var_index(&name).ok_or(AlgebraError::UnknownVariable(name))?;
    let mut e = 1u32;
    if lx.eat(b'^') {
        let v = lx.uint()?;
        e = match u32::try_from(v) {
            Ok(e) if e <= u16::MAX as u32 => e,
            _ => return lx.err("exponent too large"),
        };
    }
    let cur = mono.exponent(var);
    if cur + e > u16::MAX as u32 {
        return lx.err("exponent too large");
    }
    mono.set_exponent(var, cur + e);
    Ok(())
}

fn parse_term<K: Field>(lx: &mut Lexer<'_>, ring: &RingRef, negative: bool) -> Result<Term<K>> {
    let field = ring.field();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut mono = Monomial::ONE;
    let start = lx.pos;
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            num = lx.uint()?;
            if lx.eat(b'/') {
                den = lx.uint()?;
            }
        }
        Some(c) if c.is_ascii_alphabetic() => parse_factor(lx, ring, &mut mono)?,
        Some(_) => return lx.err("expected a term"),
        None => return lx.err("unexpected end of input"),
    }
    while lx.eat(b'*') {
        parse_factor(lx, ring, &mut mono)?;
    }
    if negative {
        num = -num;
    }
    let coeff = K::from_fraction(&field, &num, &den)
        .ok_or(AlgebraError::Parse { offset: start, message: "denominator vanishes in the field".into() })?;
    Ok(Term { coeff, mono })
}

pub fn parse_poly<K: Field>(text: &str, ring: &RingRef) -> Result<Polynomial<K>> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut negative = false;
    if lx.eat(b'-') {
        negative = true;
    } else {
        lx.eat(b'+');
    }
    loop {
        terms.push(parse_term::<K>(&mut lx, ring, negative)?);
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                lx.pos += 1;
                negative = true;
            }
            Some(_) => return lx.err("expected '+', '-' or end of input"),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn format_monomial(ring: &RingRef, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in 0..ring.nvars() {
        match m.exponent(v) {
            0 => {}
            1 => parts.push(ring.name(v).to_string()),
            e => parts.push(format!("{}^{}", ring.name(v), e)),
        }
    }
    parts.join("*")
}

pub fn format_poly<K: Field>(p: &Polynomial<K>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ring = p.ring();
    let mut out = String::new();
    for (i, t) in p.terms().iter().enumerate() {
        let (neg, abs) = t.coeff.sign_and_abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if t.mono.is_one() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&format_monomial(ring, &t.mono));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldSpec, Fp, Rational, RingSpec};

    #[test]
    fn reads_two_term_polynomial() {
        let r = RingSpec::affine(3, FieldSpec::Rationals);
        let f: Polynomial<Rational> = parse_poly("x1^2 - 2*x2*x3", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "x1^2 - 2*x2*x3");
        let g: Polynomial<Rational> = parse_poly("X1^2-2*X2 * X3", &r).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn zero_is_empty() {
        let r = RingSpec::affine(3, FieldSpec::Rationals);
        let f: Polynomial<Rational> = parse_poly("0", &r).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn rational_coefficient() {
        let r = RingSpec::kernel_ring(3, 1, FieldSpec::Rationals).unwrap();
        let f: Polynomial<Rational> = parse_poly("3/2*y1*w - y2^3", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.terms().iter().any(|t| t.coeff == Rational::new(3, 2)));
        let back: Polynomial<Rational> = parse_poly(&f.to_string(), &r).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn errors_carry_offsets() {
        let r = RingSpec::affine(3, FieldSpec::Rationals);
        match parse_poly::<Rational>("x1 + * x2", &r) {
            Err(AlgebraError::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_poly::<Rational>("x1 + q7", &r), Err(AlgebraError::UnknownVariable(_))));
        assert!(parse_poly::<Rational>("x1 x2", &r).is_err());
    }

    #[test]
    fn prime_field_symmetric_printing() {
        let r = RingSpec::affine(2, FieldSpec::Prime(101));
        let f: Polynomial<Fp> = parse_poly("100*x1 + 1/2", &r).unwrap();
        assert_eq!(f.to_string(), "-x1 - 50");
        assert!(parse_poly::<Fp>("1/101*x1", &r).is_err());
    }
}
