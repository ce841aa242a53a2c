//! Symbolic powers of maximal-minor ideals, fresh generators, annihilators and
//! the Eisenbud–Mazur verifier.

mod cache;
pub mod eima;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::groebner::{
    generators_in, ideal_quotient, relative_generator_degrees, saturate_by_maximal_ideal, Budget, GeneratorDegrees,
    Ideal,
};
use crate::linmat::{minors_ideal, LinearFormMatrix, Provenance};
use crate::ring::Field;

pub use eima::{eisenbud_mazur_check, EiMaRow, EiMaTable};

/// The ideal of maximal minors of a matrix produced by the linmat pipeline.
/// Symbolic powers are only offered for this class, where they coincide with
/// saturations of ordinary powers.
#[derive(Clone, Debug)]
pub struct MinorsIdeal<K: Field> {
    ideal: Ideal<K>,
    m: usize,
    n: usize,
    provenance: Provenance,
}

impl<K: Field> MinorsIdeal<K> {
    pub fn from_matrix(l: &LinearFormMatrix<K>) -> Result<Self> {
        let t = l.cols().min(l.rows());
        Ok(MinorsIdeal { ideal: minors_ideal(l, t)?, m: l.rows(), n: l.nvars(), provenance: l.provenance().clone() })
    }

    pub fn ideal(&self) -> &Ideal<K> {
        &self.ideal
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cache key `(seed or fixture, m, n, field)`; derived and file matrices
    /// are not cached.
    fn cache_key(&self) -> Option<String> {
        let origin = match &self.provenance {
            Provenance::Random { seed, retries } => format!("seed={seed}+{retries}"),
            Provenance::Fixture(name) => format!("fixture={name}"),
            _ => return None,
        };
        Some(format!("{origin};m={};n={};field={}", self.m, self.n, self.ideal.ring().field()))
    }
}

/// `I^r` against `I^(r) = I^r : m^∞`.
#[derive(Clone, Debug)]
pub struct SymbolicPowerResult<K: Field> {
    pub r: u32,
    pub ordinary: Ideal<K>,
    pub symbolic: Ideal<K>,
    pub equal: bool,
    /// Least `s` with `m^s · I^(r) ⊆ I^r`.
    pub saturation_exponent: u32,
}

/// `I^(r)` by saturating `I^r` with respect to the variables. Results are
/// memoized per matrix and exponent.
pub fn symbolic_power<K: Field>(i: &MinorsIdeal<K>, r: u32, budget: &Budget) -> Result<Arc<SymbolicPowerResult<K>>> {
    if r == 0 {
        return Err(AlgebraError::Config("symbolic powers start at r = 1".into()));
    }
    let key = i.cache_key();
    if let Some(k) = &key {
        if let Some(hit) = cache::get::<SymbolicPowerResult<K>>(k, r) {
            return Ok(hit);
        }
    }
    let ordinary = i.ideal.power(r);
    let (symbolic, s) = saturate_by_maximal_ideal(&ordinary, budget)?;
    let gb = ordinary.groebner(budget)?;
    let equal = generators_in(&symbolic, &gb)?;
    let result = Arc::new(SymbolicPowerResult { r, ordinary, symbolic, equal, saturation_exponent: s });
    if let Some(k) = &key {
        cache::put(k, r, result.clone());
    }
    Ok(result)
}

/// Degree bound for fresh-generator searches: top generator degree of `I^r`
/// plus `2n`.
pub fn default_fresh_bound<K: Field>(i: &MinorsIdeal<K>, r: u32) -> u32 {
    let top = i.ideal.max_degree().unwrap_or(0);
    r * top + 2 * i.n as u32
}

/// Minimal generator degrees of `I^(r)` modulo `Σ_{1≤j<r} I^(r−j)·I^(j)`.
/// `lower[j−1]` must hold `I^(j)` for every `j < r`.
pub fn fresh_generators<K: Field>(
    i: &MinorsIdeal<K>,
    r: u32,
    target: &SymbolicPowerResult<K>,
    lower: &[Arc<SymbolicPowerResult<K>>],
    dmax: Option<u32>,
) -> Result<GeneratorDegrees> {
    let ring = i.ideal.ring();
    for j in 1..r {
        match lower.get(j as usize - 1) {
            Some(res) if res.r == j => {}
            _ => return Err(AlgebraError::Config(format!("fresh generators at r={r} need the symbolic power r={j}"))),
        }
    }
    if target.r != r {
        return Err(AlgebraError::Config(format!("target holds r={}, asked for r={r}", target.r)));
    }
    let mut products = Ideal::zero(ring);
    for j in 1..=r / 2 {
        let a = &lower[(r - j) as usize - 1].symbolic;
        let b = &lower[j as usize - 1].symbolic;
        products = products.sum(&a.product(b)?)?;
    }
    let bound = dmax.unwrap_or_else(|| default_fresh_bound(i, r));
    relative_generator_degrees(&target.symbolic, &products, bound)
}

/// `I^r : I^(r)`, the annihilator of `I^(r)/I^r`.
pub fn annihilator_quotient<K: Field>(res: &SymbolicPowerResult<K>, budget: &Budget) -> Result<Ideal<K>> {
    if res.equal {
        return Ok(Ideal::unit(res.ordinary.ring()));
    }
    ideal_quotient(&res.ordinary, &res.symbolic, budget)
}

/// One row of [`symbolic_generator_table`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub r: u32,
    pub equal: bool,
    #[serde(rename = "satExponent")]
    pub sat_exponent: u32,
    #[serde(rename = "freshDegrees")]
    pub fresh_degrees: Vec<u32>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicTable {
    pub rows: Vec<TableRow>,
    /// Set when the budget ran out before `rmax`.
    pub partial: bool,
}

impl SymbolicTable {
    /// Symbolic degrees that contribute fresh generators.
    pub fn fresh_levels(&self) -> Vec<u32> {
        self.rows.iter().filter(|r| !r.fresh_degrees.is_empty()).map(|r| r.r).collect()
    }
}

/// Fresh generators of `I^(r)` for `r = 1..rmax`. At `r = 1` these are the
/// minimal generators of `I` itself.
pub fn symbolic_generator_table<K: Field>(
    l: &LinearFormMatrix<K>,
    rmax: u32,
    budget: &Budget,
) -> Result<SymbolicTable> {
    let i = MinorsIdeal::from_matrix(l)?;
    let mut lower: Vec<Arc<SymbolicPowerResult<K>>> = Vec::new();
    let mut rows = Vec::new();
    for r in 1..=rmax {
        let step =
            symbolic_power(&i, r, budget).and_then(|res| fresh_generators(&i, r, &res, &lower, None).map(|f| (res, f)));
        match step {
            Ok((res, fresh)) => {
                rows.push(TableRow {
                    r,
                    equal: res.equal,
                    sat_exponent: res.saturation_exponent,
                    fresh_degrees: fresh.degrees,
                });
                lower.push(res);
            }
            Err(e) if e.is_budget() => return Ok(SymbolicTable { rows, partial: true }),
            Err(e) => return Err(e),
        }
    }
    Ok(SymbolicTable { rows, partial: false })
}
