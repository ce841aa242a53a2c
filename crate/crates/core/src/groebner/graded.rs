//! Minimal generator degrees of homogeneous ideals by linear algebra on
//! graded pieces.

use super::ideal::Ideal;
use crate::error::{AlgebraError, Result};
use crate::ring::{Field, MonoMap, Monomial, Polynomial, RingRef};

/// Row echelon form of a set of polynomials viewed as coefficient vectors.
pub struct Echelon<K: Field> {
    pivots: MonoMap<usize>,
    rows: Vec<Polynomial<K>>,
}

impl<K: Field> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { pivots: MonoMap::default(), rows: Vec::new() }
    }
}

impl<K: Field> Echelon<K> {
    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &Polynomial<K>) -> bool {
        let mut v = v.clone();
        while let Some(t) = v.lead().cloned() {
            match self.pivots.get(&t.mono) {
                Some(&k) => {
                    v = v.add_scaled(&self.rows[k], &t.coeff.neg(), &Monomial::ONE);
                }
                None => {
                    let v = v.monic();
                    self.pivots.insert(t.mono, self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Polynomial<K>] {
        &self.rows
    }
}

/// Bases of the graded pieces `I_0, …, I_dmax` of a homogeneous ideal.
fn graded_pieces<K: Field>(ring: &RingRef, gens: &[Polynomial<K>], dmax: u32) -> Vec<Echelon<K>> {
    let w = ring.weights();
    let n = ring.nvars();
    let mut pieces: Vec<Echelon<K>> = Vec::with_capacity(dmax as usize + 1);
    for d in 0..=dmax {
        let mut e = Echelon::default();
        for v in 0..n {
            let wv = w[v];
            if wv > d {
                continue;
            }
            let x = Polynomial::var(ring, v);
            for row in pieces[(d - wv) as usize].rows() {
                e.insert(&(&x * row));
            }
        }
        for g in gens.iter().filter(|g| g.weighted_degree() == Some(d)) {
            e.insert(g);
        }
        pieces.push(e);
    }
    pieces
}

/// Multiset of degrees, with a flag telling whether the degree bound was high
/// enough to see every minimal generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDegrees {
    pub degrees: Vec<u32>,
    pub complete: bool,
    pub dmax: u32,
}

impl GeneratorDegrees {
    pub fn count(&self, d: u32) -> usize {
        self.degrees.iter().filter(|&&e| e == d).count()
    }
}

fn check_homogeneous<K: Field>(gens: &[Polynomial<K>]) -> Result<()> {
    for g in gens {
        if !g.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous(g.to_string()));
        }
    }
    Ok(())
}

/// Degrees of minimal generators of `A` modulo `B + m·A` for homogeneous
/// ideals with `B ⊆ A`: in each degree `d` this is
/// `dim A_d − dim (B + m·A)_d`.
pub fn relative_generator_degrees<K: Field>(a: &Ideal<K>, b: &Ideal<K>, dmax: u32) -> Result<GeneratorDegrees> {
    let ring = a.ring();
    let b = b.to_ring(ring)?;
    check_homogeneous(a.generators())?;
    check_homogeneous(b.generators())?;
    let w = ring.weights();
    let pa = graded_pieces(ring, a.generators(), dmax);
    let pb = graded_pieces(ring, b.generators(), dmax);
    let mut degrees = Vec::new();
    for d in 0..=dmax {
        let mut e = Echelon::default();
        for row in pb[d as usize].rows() {
            e.insert(row);
        }
        for v in 0..ring.nvars() {
            if w[v] > d {
                continue;
            }
            let x = Polynomial::var(ring, v);
            for row in pa[(d - w[v]) as usize].rows() {
                e.insert(&(&x * row));
            }
        }
        let low = e.rank();
        for g in a.generators().iter().filter(|g| g.weighted_degree() == Some(d)) {
            e.insert(g);
        }
        debug_assert_eq!(e.rank(), pa[d as usize].rank().max(e.rank()));
        for _ in low..e.rank() {
            degrees.push(d);
        }
    }
    let top = a.generators().iter().filter_map(|g| g.weighted_degree()).max().unwrap_or(0);
    Ok(GeneratorDegrees { degrees, complete: dmax >= top, dmax })
}

/// Degrees of a minimal homogeneous generating set of `I`, up to `dmax`.
pub fn minimal_generator_degrees<K: Field>(ideal: &Ideal<K>, dmax: u32) -> Result<GeneratorDegrees> {
    relative_generator_degrees(ideal, &Ideal::zero(ideal.ring()), dmax)
}

/// Dimension of the degree-`d` piece of an ideal given by homogeneous generators.
pub fn graded_dimension<K: Field>(ideal: &Ideal<K>, d: u32) -> Result<usize> {
    check_homogeneous(ideal.generators())?;
    Ok(graded_pieces(ideal.ring(), ideal.generators(), d)[d as usize].rank())
}
