//! Writing an element of `I^k` in terms of the products of generators.

use super::engine::{groebner_basis_with, normal_form, Budget, GbOptions};
use super::ideal::{exponent_vectors, Ideal};
use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Polynomial};

/// One coefficient of a lift: `f = Σ coeff · Π gens[i]^exponents[i]`.
#[derive(Clone, Debug)]
pub struct LiftTerm<K: Field> {
    pub exponents: Vec<u32>,
    pub coeff: Polynomial<K>,
}

/// Finds `P_e` with `f = Σ_{|e|=k} P_e · g^e`, one entry per exponent vector in
/// lexicographically decreasing order. Fails with `MembershipFailed` when
/// `f ∉ (gens)^k`.
pub fn lift_into_power<K: Field>(
    f: &Polynomial<K>,
    gens: &[Polynomial<K>],
    k: u32,
    budget: &Budget,
) -> Result<Vec<LiftTerm<K>>> {
    let ring = f.ring().clone();
    let gens = gens.iter().map(|g| g.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
    let exps = exponent_vectors(gens.len(), k);
    let mut products = Vec::with_capacity(exps.len());
    let mut keep = Vec::with_capacity(exps.len());
    for (idx, e) in exps.iter().enumerate() {
        let mut p = Polynomial::one(&ring);
        for (g, &ei) in gens.iter().zip(e) {
            if ei > 0 {
                p = &p * &g.pow(ei);
            }
        }
        if !p.is_zero() {
            products.push(p);
            keep.push(idx);
        }
    }
    let ideal = Ideal::from_parts(ring.clone(), products);
    let options = GbOptions { track_cofactors: true, ..GbOptions::default() };
    let gb = groebner_basis_with(&ideal, ring.order(), budget, &options)?;
    let (rem, q) = normal_form(f, &gb, true)?;
    if !rem.is_zero() {
        return Err(AlgebraError::MembershipFailed { remainder: rem.to_ring(&ring)?.to_string() });
    }
    let q = q.expect("requested cofactors");
    let cof = gb.cofactors().expect("tracked cofactors");
    let mut out: Vec<LiftTerm<K>> =
        exps.iter().map(|e| LiftTerm { exponents: e.clone(), coeff: Polynomial::zero(&ring) }).collect();
    for (slot, &idx) in keep.iter().enumerate() {
        let mut c = Polynomial::zero(gb.ring());
        for (i, qi) in q.iter().enumerate() {
            if !qi.is_zero() && !cof[i][slot].is_zero() {
                c = &c + &(qi * &cof[i][slot]);
            }
        }
        out[idx].coeff = c.to_ring(&ring)?;
    }
    Ok(out)
}

/// Recombines a lift; used to check one.
pub fn evaluate_lift<K: Field>(terms: &[LiftTerm<K>], gens: &[Polynomial<K>]) -> Result<Polynomial<K>> {
    let ring = gens.first().map(|g| g.ring().clone()).ok_or(AlgebraError::ShapeMismatch("no generators".into()))?;
    let mut acc = Polynomial::zero(&ring);
    for t in terms {
        let mut p = t.coeff.to_ring(&ring)?;
        for (g, &e) in gens.iter().zip(&t.exponents) {
            if e > 0 {
                p = &p * &g.pow(e);
            }
        }
        acc = &acc + &p;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, FieldSpec, Rational, RingSpec};

    #[test]
    fn lift_into_square() {
        let r = RingSpec::affine(3, FieldSpec::Rationals);
        let p = |s: &str| parse_poly::<Rational>(s, &r).unwrap();
        let gens = vec![p("x1"), p("x2 + x3")];
        let (g1, g2) = (&gens[0], &gens[1]);
        let f = &(&(&p("x3 - 1") * &(g1 * g1)) + &(&p("5") * &(g1 * g2))) - &(&p("x2") * &(g2 * g2));
        let lift = lift_into_power(&f, &gens, 2, &Budget::unlimited()).unwrap();
        assert_eq!(lift.len(), 3);
        assert_eq!(evaluate_lift(&lift, &gens).unwrap(), f);
    }

    #[test]
    fn non_member_rejected() {
        let r = RingSpec::affine(2, FieldSpec::Rationals);
        let p = |s: &str| parse_poly::<Rational>(s, &r).unwrap();
        let err = lift_into_power(&p("x1"), &[p("x1"), p("x2")], 2, &Budget::unlimited()).unwrap_err();
        assert!(matches!(err, AlgebraError::MembershipFailed { .. }));
    }
}
