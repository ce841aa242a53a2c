//! Canonical sparse polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::{Field, Fp, Rational};
use super::monomial::{MonoMap, Monomial, MAX_VARS};
use super::spec::RingRef;
use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<K> {
    pub coeff: K,
    pub mono: Monomial,
}

/// A polynomial whose terms are sorted strictly descending in the ring's
/// order, with no zero coefficients. Equal polynomials have equal term lists.
#[derive(Clone)]
pub struct Polynomial<K: Field> {
    ring: RingRef,
    terms: Vec<Term<K>>,
}

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> Hash for Polynomial<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::format_poly(self))
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::parse::format_poly(self))
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &RingRef) -> Self {
        assert!(K::accepts(&ring.field()), "coefficient type does not match the ring's field");
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: K) -> Self {
        Self::monomial(ring, c, Monomial::ONE)
    }

    pub fn from_i64(ring: &RingRef, v: i64) -> Self {
        Self::constant(ring, K::from_i64(&ring.field(), v))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        assert!(index < ring.nvars());
        Self::monomial(ring, K::from_i64(&ring.field(), 1), Monomial::variable(index))
    }

    /// The variable with the given name; panics if absent.
    pub fn var_named(ring: &RingRef, name: &str) -> Self {
        Self::var(ring, ring.var(name).expect("known variable"))
    }

    pub fn monomial(ring: &RingRef, c: K, m: Monomial) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push(Term { coeff: c, mono: m });
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary terms.
    pub fn from_terms(ring: &RingRef, terms: Vec<Term<K>>) -> Self {
        let mut map: MonoMap<K> = MonoMap::default();
        for t in terms {
            match map.get_mut(&t.mono) {
                Some(c) => *c = c.add(&t.coeff),
                None => {
                    map.insert(t.mono, t.coeff);
                }
            }
        }
        Self::from_map(ring, map)
    }

    pub(crate) fn from_map(ring: &RingRef, map: MonoMap<K>) -> Self {
        let mut terms: Vec<Term<K>> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(mono, coeff)| Term { coeff, mono }).collect();
        let order = ring.order();
        terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut p = Self::zero(ring);
        p.terms = terms;
        p
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<K>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() && self.terms[0].coeff.is_one()
    }

    pub fn lead(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn lead_coeff(&self) -> Option<&K> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        let order = self.ring.order();
        match self.terms.binary_search_by(|t| order.cmp(m, &t.mono)) {
            Ok(i) => self.terms[i].coeff.clone(),
            Err(_) => self.zero_coeff(),
        }
    }

    /// Coefficient of the single variable `var` (for linear forms).
    pub fn linear_coefficient(&self, var: usize) -> K {
        self.coefficient(&Monomial::variable(var))
    }

    fn zero_coeff(&self) -> K {
        K::from_i64(&self.ring.field(), 0)
    }

    pub(crate) fn field_one(&self) -> K {
        K::from_i64(&self.ring.field(), 1)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    /// Total standard degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn weighted_degree(&self) -> Option<u32> {
        let w = self.ring.weights();
        self.terms.iter().map(|t| t.mono.weighted_degree(w)).max()
    }

    pub fn degree_in_var(&self, var: usize) -> u32 {
        self.terms.iter().map(|t| t.mono.exponent(var)).max().unwrap_or(0)
    }

    /// Homogeneous with respect to the ring's weights (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.is_homogeneous_wrt(self.ring.weights())
    }

    pub fn is_homogeneous_wrt(&self, weights: &[u32]) -> bool {
        let mut it = self.terms.iter().map(|t| t.mono.weighted_degree(weights));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Bitmask of variables occurring in some term.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |m, t| m | t.mono.support_mask())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &self.field_one(), &Monomial::ONE))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &self.field_one().neg(), &Monomial::ONE))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c·m·other` by a single merge pass.
    pub fn add_scaled(&self, other: &Self, c: &K, m: &Monomial) -> Self {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m) }).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp(&x.mono, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = x.coeff.add(&y.coeff);
                        if !s.is_zero() {
                            out.push(Term { coeff: s, mono: x.mono });
                        }
                    }
                },
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: t.coeff.neg(), mono: t.mono }).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono }).collect(),
        }
    }

    /// Multiplication by the term `c·m`; keeps the order, so no sorting.
    pub fn mul_term(&self, c: &K, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m) }).collect(),
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].coeff, &self.terms[0].mono);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].coeff, &other.terms[0].mono);
        }
        let mut map: MonoMap<K> = MonoMap::default();
        map.reserve(self.terms.len() * other.terms.len() / 2);
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono);
                let c = a.coeff.mul(&b.coeff);
                match map.get_mut(&m) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(&self.ring, map)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        if e == 0 {
            return acc;
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Self::monomial(&self.ring, t.coeff.pow(e as u64), t.mono.pow(e));
        }
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the lead coefficient.
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv()),
        }
    }

    /// Exact quotient `self / g`, or the remainder of the division as witness.
    pub fn exact_divide(&self, g: &Self) -> Result<Self> {
        self.check_ring(g)?;
        let (glm, glc) = match g.lead() {
            Some(t) => (t.mono, t.coeff.clone()),
            None => return Err(AlgebraError::NotDivisible { remainder: "division by zero".into() }),
        };
        let ginv = glc.inv();
        let mut p = self.clone();
        let mut quotient = Vec::new();
        let mut remainder = Vec::new();
        while let Some(t) = p.terms.first().cloned() {
            match t.mono.checked_div(&glm) {
                Some(q) => {
                    let c = t.coeff.mul(&ginv);
                    p = p.add_scaled(g, &c.neg(), &q);
                    quotient.push(Term { coeff: c, mono: q });
                }
                None => {
                    remainder.push(t);
                    p.terms.remove(0);
                }
            }
        }
        if remainder.is_empty() {
            Ok(Self::from_sorted(&self.ring, quotient))
        } else {
            let r = Self::from_sorted(&self.ring, remainder);
            Err(AlgebraError::NotDivisible { remainder: r.to_string() })
        }
    }

    /// Largest `k` with `var^k` dividing `self` and the quotient.
    pub fn strip_variable(&self, var: usize) -> (u32, Self) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let k = self.terms.iter().map(|t| t.mono.exponent(var)).min().unwrap_or(0);
        if k == 0 {
            return (0, self.clone());
        }
        let mut d = Monomial::ONE;
        d.set_exponent(var, k);
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.div(&d) }).collect();
        // dividing by a monomial preserves the order
        (k, Self::from_sorted(&self.ring, terms))
    }

    /// `self / var` when the variable divides every term.
    pub fn divide_by_var(&self, var: usize) -> Option<Self> {
        if self.terms.iter().any(|t| t.mono.exponent(var) == 0) {
            return None;
        }
        let x = Monomial::variable(var);
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.div(&x) }).collect();
        Some(Self::from_sorted(&self.ring, terms))
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|t| t.mono.exponent(var) > 0)
            .map(|t| {
                let e = t.mono.exponent(var);
                let mut m = t.mono;
                m.set_exponent(var, e - 1);
                Term { coeff: t.coeff.mul(&K::from_i64(&field, e as i64)), mono: m }
            })
            .filter(|t| !t.coeff.is_zero())
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Formal partial derivatives with respect to every ring variable.
    pub fn partial_derivatives(&self) -> Vec<Self> {
        (0..self.ring.nvars()).map(|v| self.partial_derivative(v)).collect()
    }

    /// Ring homomorphism evaluation: variable `v` goes to `images[v]`, all images
    /// living in `target`. Variables absent from `self` need no image.
    pub fn substitute(&self, target: &RingRef, images: &[Option<Polynomial<K>>]) -> Result<Self> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(AlgebraError::ShapeMismatch(format!("{} images for {} variables", images.len(), n)));
        }
        for img in images.iter().flatten() {
            if !same_ring(img.ring(), target) {
                return Err(AlgebraError::RingMismatch("substitution images must share one ring".into()));
            }
        }
        let used = self.support_mask();
        for v in 0..n {
            if used & (1 << v) != 0 && images[v].is_none() {
                return Err(AlgebraError::MissingAssignment(self.ring.name(v).to_string()));
            }
        }
        let mut powers: Vec<Vec<Self>> = vec![Vec::new(); n];
        let mut acc: MonoMap<K> = MonoMap::default();
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for v in 0..n {
                let e = t.mono.exponent(v) as usize;
                if e == 0 {
                    continue;
                }
                let img = images[v].as_ref().unwrap();
                let pw = &mut powers[v];
                if pw.is_empty() {
                    pw.push(Polynomial::one(target));
                }
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * img;
                    pw.push(next);
                }
                prod = &prod * &pw[e];
                if prod.is_zero() {
                    break;
                }
            }
            for pt in prod.terms {
                match acc.get_mut(&pt.mono) {
                    Some(c) => *c = c.add(&pt.coeff),
                    None => {
                        acc.insert(pt.mono, pt.coeff);
                    }
                }
            }
        }
        Ok(Self::from_map(target, acc))
    }

    /// Moves the polynomial into a ring whose variable names include all
    /// variables occurring here; the order of `target` is applied.
    pub fn to_ring(&self, target: &RingRef) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        if self.ring.field() != target.field() {
            return Err(AlgebraError::RingMismatch(format!("field {} vs {}", self.ring.field(), target.field())));
        }
        let used = self.support_mask();
        let mut map = vec![usize::MAX; self.ring.nvars()];
        for (v, slot) in map.iter_mut().enumerate() {
            match target.var_index(self.ring.name(v)) {
                Some(j) => *slot = j,
                None if used & (1 << v) != 0 => {
                    return Err(AlgebraError::UnknownVariable(self.ring.name(v).to_string()));
                }
                None => *slot = MAX_VARS - 1,
            }
        }
        let terms =
            self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), mono: t.mono.remap(&map) }).collect::<Vec<_>>();
        let mut p = Polynomial { ring: target.clone(), terms };
        let order = target.order();
        p.terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        Ok(p)
    }

    /// Terms of weighted degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let w = self.ring.weights();
        let terms = self.terms.iter().filter(|t| t.mono.weighted_degree(w) == d).cloned().collect();
        Self::from_sorted(&self.ring, terms)
    }

    /// Applies a coefficient map into another field, dropping zeros.
    pub fn map_coefficients<L: Field>(&self, target: &RingRef, f: impl Fn(&K) -> Option<L>) -> Result<Polynomial<L>> {
        if !self.ring.same_variables_except_field(target) {
            return Err(AlgebraError::RingMismatch("coefficient map needs identical variables".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = f(&t.coeff).ok_or_else(|| AlgebraError::InvalidField("coefficient not representable".into()))?;
            if !c.is_zero() {
                terms.push(Term { coeff: c, mono: t.mono });
            }
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl Polynomial<Rational> {
    /// Reduction modulo the prime of `target`; fails when a denominator vanishes.
    pub fn reduce_mod_p(&self, target: &RingRef) -> Result<Polynomial<Fp>> {
        let spec = target.field();
        self.map_coefficients(target, |c| Fp::from_fraction(&spec, c.numer(), c.denom()))
    }
}

impl<'a, K: Field> std::ops::Add<&'a Polynomial<K>> for &'a Polynomial<K> {
    type Output = Polynomial<K>;
    fn add(self, rhs: &'a Polynomial<K>) -> Polynomial<K> {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a, K: Field> std::ops::Sub<&'a Polynomial<K>> for &'a Polynomial<K> {
    type Output = Polynomial<K>;
    fn sub(self, rhs: &'a Polynomial<K>) -> Polynomial<K> {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a, K: Field> std::ops::Mul<&'a Polynomial<K>> for &'a Polynomial<K> {
    type Output = Polynomial<K>;
    fn mul(self, rhs: &'a Polynomial<K>) -> Polynomial<K> {
        self.checked_mul(rhs).expect("ring mismatch in multiplication")
    }
}

impl<K: Field> std::ops::Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(self)
    }
}

/// Binary arithmetic selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic reporting ring mismatches as errors.
pub fn poly_arith<K: Field>(op: ArithOp, a: &Polynomial<K>, b: &Polynomial<K>) -> Result<Polynomial<K>> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, FieldSpec, RingSpec};

    fn ring3() -> RingRef {
        RingSpec::affine(3, FieldSpec::Rationals)
    }

    fn p(s: &str, r: &RingRef) -> Polynomial<Rational> {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring3();
        let a = p("x1 + x2", &r);
        let b = p("x1 - x2", &r);
        assert_eq!(&a * &b, p("x1^2 - x2^2", &r));
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = ring3();
        let f = p("3*x1^2*x3 - 7/5*x2 + 1", &r);
        assert!((&f + &f.neg()).is_zero());
    }

    #[test]
    fn cube_of_binomial() {
        let r = ring3();
        assert_eq!(p("x1 + x2", &r).pow(3), p("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", &r));
        assert!(p("x1 + x2", &r).pow(0).is_one());
    }

    #[test]
    fn exact_division() {
        let r = ring3();
        assert_eq!(p("x1^2 - x2^2", &r).exact_divide(&p("x1 - x2", &r)).unwrap(), p("x1 + x2", &r));
        match p("x1*x2", &r).exact_divide(&p("x3", &r)) {
            Err(AlgebraError::NotDivisible { remainder }) => assert_eq!(remainder, "x1*x2"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn substitution_of_variables() {
        let r = RingSpec::builder(FieldSpec::Rationals).block("x", 2).block("y", 2).build().unwrap();
        let f = p("x1^2 + x2", &r);
        let imgs = vec![Some(p("y1", &r)), Some(p("y2^2", &r)), None, None];
        assert_eq!(f.substitute(&r, &imgs).unwrap(), p("y1^2 + y2^2", &r));
        let bad = vec![Some(p("y1", &r)), None, None, None];
        assert!(matches!(f.substitute(&r, &bad), Err(AlgebraError::MissingAssignment(_))));
    }

    #[test]
    fn derivatives() {
        let r = ring3();
        let d = p("x1^2*x2", &r).partial_derivatives();
        assert_eq!(d, vec![p("2*x1*x2", &r), p("x1^2", &r), p("0", &r)]);
        assert!(p("5", &r).partial_derivatives().iter().all(|q| q.is_zero()));
    }

    #[test]
    fn euler_identity_on_quadric() {
        let r = ring3();
        let f = p("x1*x2 - x3^2", &r);
        let mut s = Polynomial::zero(&r);
        for (i, d) in f.partial_derivatives().iter().enumerate() {
            s = &s + &(&Polynomial::var(&r, i) * d);
        }
        assert_eq!(s, f.scale(&Rational::new(2, 1)));
    }

    #[test]
    fn ring_mismatch_reported() {
        let a = p("x1", &ring3());
        let b: Polynomial<Rational> = parse_poly("x1", &RingSpec::affine(2, FieldSpec::Rationals)).unwrap();
        assert!(matches!(poly_arith(ArithOp::Add, &a, &b), Err(AlgebraError::RingMismatch(_))));
    }

    #[test]
    fn strip_and_reorder() {
        let r = ring3();
        let (k, q) = p("x1^2*x3 + x1^3", &r).strip_variable(0);
        assert_eq!(k, 2);
        assert_eq!(q, p("x3 + x1", &r));
        let lex = r.with_order(crate::ring::MonomialOrder::lex(3));
        let f = p("x2^3 + x1", &r);
        let g = f.to_ring(&lex).unwrap();
        assert_eq!(g.lead_monomial(), Some(Monomial::variable(0)));
    }
}
