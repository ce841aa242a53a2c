//! Ideals given by generators, and their text serialization.

use std::fmt;

use super::engine::{groebner_basis, normal_form, Budget, GroebnerBasis};
use crate::error::{AlgebraError, Result};
use crate::ring::{parse_poly, Field, MonomialOrder, Polynomial, RingRef, RingSpec};

#[derive(Clone)]
pub struct Ideal<K: Field> {
    ring: RingRef,
    gens: Vec<Polynomial<K>>,
}

impl<K: Field> fmt::Debug for Ideal<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl<K: Field> Ideal<K> {
    /// Generators are moved into `ring`; zeros and exact duplicates are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Polynomial<K>>) -> Result<Self> {
        let mut out: Vec<Polynomial<K>> = Vec::with_capacity(gens.len());
        for g in gens {
            let g = g.to_ring(ring)?;
            if !g.is_zero() && !out.contains(&g) {
                out.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: out })
    }

    pub(crate) fn from_parts(ring: RingRef, gens: Vec<Polynomial<K>>) -> Self {
        debug_assert!(gens.iter().all(|g| !g.is_zero()));
        Ideal { ring, gens }
    }

    pub fn zero(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &RingRef) -> Self {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one(ring)] }
    }

    /// Parses each string as a generator.
    pub fn from_strs(ring: &RingRef, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| parse_poly(s, ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    /// The ideal generated by some ring variables.
    pub fn variables(ring: &RingRef, vars: &[usize]) -> Self {
        Ideal { ring: ring.clone(), gens: vars.iter().map(|&v| Polynomial::var(ring, v)).collect() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Homogeneous for the ring's weights.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().filter_map(|g| g.degree()).max()
    }

    pub fn to_ring(&self, target: &RingRef) -> Result<Self> {
        Ideal::new(target, self.gens.clone())
    }

    /// Reduced basis in the ring's own order.
    pub fn groebner(&self, budget: &Budget) -> Result<GroebnerBasis<K>> {
        groebner_basis(self, self.ring.order(), budget)
    }

    pub fn groebner_in(&self, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<K>> {
        groebner_basis(self, order, budget)
    }

    /// Text form: the ring header then one generator per line.
    pub fn serialize(&self) -> String {
        let mut s = self.ring.header();
        for g in &self.gens {
            s.push('\n');
            s.push_str(&g.to_string());
        }
        s.push('\n');
        s
    }

    /// Inverse of [`Ideal::serialize`]; blank lines are skipped.
    pub fn parse(text: &str) -> Result<(RingRef, Self)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(AlgebraError::Parse { offset: 0, message: "empty input".into() })?;
        let ring = RingSpec::parse_header(header)?;
        let gens = lines.map(|l| parse_poly(l, &ring)).collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(&ring, gens)?;
        Ok((ring, ideal))
    }
}

/// How [`ideal_combine`] joins its arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineOp {
    Sum,
    Product,
}

/// Generator-level sum or product.
pub fn ideal_combine<K: Field>(op: CombineOp, a: &Ideal<K>, b: &Ideal<K>) -> Result<Ideal<K>> {
    let ring = a.ring();
    let b = b.to_ring(ring)?;
    match op {
        CombineOp::Sum => {
            let mut gens = a.gens.clone();
            gens.extend(b.gens.iter().cloned());
            Ideal::new(ring, gens)
        }
        CombineOp::Product => {
            let mut gens = Vec::with_capacity(a.len() * b.len());
            for f in &a.gens {
                for g in &b.gens {
                    gens.push(f * g);
                }
            }
            Ideal::new(ring, gens)
        }
    }
}

impl<K: Field> Ideal<K> {
    pub fn sum(&self, other: &Self) -> Result<Self> {
        ideal_combine(CombineOp::Sum, self, other)
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        ideal_combine(CombineOp::Product, self, other)
    }

    /// All `r`-fold products of generators (one per multiset), deduplicated.
    pub fn power(&self, r: u32) -> Self {
        if r == 0 {
            return Ideal::unit(&self.ring);
        }
        let exps = exponent_vectors(self.gens.len(), r);
        let mut cache: Vec<Vec<Polynomial<K>>> =
            self.gens.iter().map(|g| vec![Polynomial::one(&self.ring), g.clone()]).collect();
        let mut gens = Vec::with_capacity(exps.len());
        for e in &exps {
            let mut p = Polynomial::one(&self.ring);
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                while cache[k].len() <= ek as usize {
                    let next = &cache[k][cache[k].len() - 1] * &self.gens[k];
                    cache[k].push(next);
                }
                p = &p * &cache[k][ek as usize];
            }
            gens.push(p);
        }
        Ideal::new(&self.ring, gens).expect("same ring")
    }
}

/// Exponent vectors of length `len` summing to `k`, in lexicographically
/// decreasing order.
pub fn exponent_vectors(len: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == len {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            rec(len, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(len, k, &mut Vec::new(), &mut out);
    out
}

/// `f ∈ I`, decided by a normal form against a basis in the ring's order.
pub fn ideal_membership<K: Field>(f: &Polynomial<K>, ideal: &Ideal<K>, budget: &Budget) -> Result<bool> {
    let gb = ideal.groebner(budget)?;
    Ok(normal_form(f, &gb, false)?.0.is_zero())
}
