//! Annihilators of `I^(d)/I^d` for `3 × 2` matrices in three variables.

use serde::Serialize;

use super::{annihilator_quotient, symbolic_power, MinorsIdeal, SymbolicPowerResult};
use crate::biratio::{inverse_representatives, source_inversion_factor};
use crate::error::{AlgebraError, Result};
use crate::groebner::{generators_in, ideals_equal, quotient_in_degree, Budget, Ideal};
use crate::linmat::{signed_maximal_minors, LinearFormMatrix};
use crate::ring::Field;

#[derive(Clone, Debug, Serialize)]
pub struct EiMaRow {
    pub d: u32,
    /// Reduced basis of `I^d : I^(d)`.
    pub annihilator: Vec<String>,
    /// Reduced basis of `(X)^⌊d/2⌋`.
    pub expected: Vec<String>,
    pub annihilator_matches: bool,
    /// Whether the saturation agrees with `(I^(2))^{d/2}` or `I·(I^(2))^{(d−1)/2}`.
    pub product_formula_matches: bool,
}

impl EiMaRow {
    pub fn passed(&self) -> bool {
        self.annihilator_matches && self.product_formula_matches
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EiMaTable {
    pub rows: Vec<EiMaRow>,
}

impl EiMaTable {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(EiMaRow::passed)
    }
}

fn basis_strings<K: Field>(i: &Ideal<K>, budget: &Budget) -> Result<Vec<String>> {
    Ok(i.groebner(budget)?.basis().iter().map(|p| p.to_string()).collect())
}

/// Decides `I^d : I^(d) = m^k` without forming the quotient. `m^k` lies in the
/// annihilator when `m^k · I^(d) ⊆ I^d`. Conversely a homogeneous ideal with no
/// nonzero forms below degree `k` sits inside `m^k`, and the forms of degree
/// `e < k` in the annihilator are found exactly by linear algebra.
fn annihilator_is_power_of_maximal<K: Field>(res: &SymbolicPowerResult<K>, k: u32, budget: &Budget) -> Result<bool> {
    let ring = res.ordinary.ring();
    let maximal = Ideal::variables(ring, &(0..ring.nvars()).collect::<Vec<_>>());
    let gb = res.ordinary.groebner(budget)?;
    if !generators_in(&maximal.power(k).product(&res.symbolic)?, &gb)? {
        return Ok(false);
    }
    let lowest = gb.basis().iter().filter_map(|p| p.degree()).min().unwrap_or(0);
    if lowest < k {
        return Ok(false);
    }
    for e in 0..k {
        if !quotient_in_degree(&res.ordinary, &res.symbolic, e, budget)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For `2 ≤ d ≤ dmax`: compares `I^(d)` from saturation with the product
/// formula built from `I²` and the inversion factor `D`, and `I^d : I^(d)` with
/// `(X)^⌊d/2⌋`.
pub fn eisenbud_mazur_check<K: Field>(l: &LinearFormMatrix<K>, dmax: u32, budget: &Budget) -> Result<EiMaTable> {
    if l.rows() != 3 || l.cols() != 2 || l.nvars() != 3 {
        return Err(AlgebraError::ShapeMismatch(format!(
            "needs a 3 x 2 matrix in 3 variables, got {}x{} in {}",
            l.rows(),
            l.cols(),
            l.nvars()
        )));
    }
    let ring = l.ring().clone();
    let i = MinorsIdeal::from_matrix(l)?;
    let delta = signed_maximal_minors(l)?;
    let rep = inverse_representatives(l)?;
    let d_factor = source_inversion_factor(&delta, &rep[0].coords)?;
    let second = i.ideal().power(2).sum(&Ideal::new(&ring, vec![d_factor])?)?;
    let maximal = Ideal::variables(&ring, &[0, 1, 2]);
    let mut rows = Vec::new();
    for d in 2..=dmax {
        let res = symbolic_power(&i, d, budget)?;
        let formula = if d % 2 == 0 { second.power(d / 2) } else { i.ideal().product(&second.power((d - 1) / 2))? };
        let product_formula_matches = ideals_equal(&formula, &res.symbolic, budget)?;
        let expected = maximal.power(d / 2);
        let annihilator_matches = annihilator_is_power_of_maximal(&res, d / 2, budget)?;
        let ann = if annihilator_matches { expected.clone() } else { annihilator_quotient(&res, budget)? };
        rows.push(EiMaRow {
            d,
            annihilator: basis_strings(&ann, budget)?,
            expected: basis_strings(&expected, budget)?,
            annihilator_matches,
            product_formula_matches,
        });
    }
    Ok(EiMaTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmat::{random_general_matrix, MatrixSpec};
    use crate::ring::{FieldSpec, Fp};

    #[test]
    fn small_range_over_fp() {
        let spec = MatrixSpec::new(3, 3, FieldSpec::prime(32003).unwrap(), 9);
        let (l, _) = random_general_matrix::<Fp>(&spec, &Budget::unlimited()).unwrap();
        let t = eisenbud_mazur_check(&l, 4, &Budget::unlimited()).unwrap();
        for row in &t.rows {
            assert!(row.passed(), "{row:?}");
        }
        assert_eq!(t.rows[0].expected.len(), 3);
    }

    #[test]
    fn shortcut_agrees_with_the_full_quotient() {
        let spec = MatrixSpec::new(3, 3, FieldSpec::prime(32003).unwrap(), 4);
        let b = Budget::unlimited();
        let (l, _) = random_general_matrix::<Fp>(&spec, &b).unwrap();
        let i = MinorsIdeal::from_matrix(&l).unwrap();
        let res = symbolic_power(&i, 3, &b).unwrap();
        let ann = annihilator_quotient(&res, &b).unwrap();
        let m = Ideal::variables(l.ring(), &[0, 1, 2]);
        assert!(ideals_equal(&ann, &m, &b).unwrap());
        assert!(annihilator_is_power_of_maximal(&res, 1, &b).unwrap());
        assert!(!annihilator_is_power_of_maximal(&res, 2, &b).unwrap());
        assert!(!annihilator_is_power_of_maximal(&res, 0, &b).unwrap());
    }
}
