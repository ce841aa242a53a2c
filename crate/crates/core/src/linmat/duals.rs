//! Jacobian matrices, the Jacobian dual, the dual linear matrix and the
//! η-matrix of the last map in the resolution of `I^{n−1}`.

use super::linear::{LinearFormMatrix, Provenance};
use super::matrix::{vector_rank, PolyMatrix};
use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Polynomial, RingRef};

/// `Θ_{ij} = ∂g_i/∂v_j` for the listed variables `v`.
pub fn jacobian_matrix<K: Field>(polys: &[Polynomial<K>], ring: &RingRef, vars: &[usize]) -> Result<PolyMatrix<K>> {
    let polys = polys.iter().map(|p| p.to_ring(ring)).collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_fn(ring, polys.len(), vars.len(), |i, j| polys[i].partial_derivative(vars[j])))
}

/// The matrix `jd` over `k[Y]` with `Y·L = X·jdᵗ`: it has one row per column `j`
/// of `L` and one column per variable `X_k`, with entry `Σ_r coeff(ℓ_{rj}, X_k)·Y_r`.
/// `target` must contain a block `y` with one variable per row of `L`.
pub fn jacobian_dual<K: Field>(l: &LinearFormMatrix<K>, target: &RingRef) -> Result<PolyMatrix<K>> {
    let ys = target.block_vars("y");
    if ys.len() != l.rows() {
        return Err(AlgebraError::ShapeMismatch(format!("need {} y-variables, ring has {}", l.rows(), ys.len())));
    }
    Ok(PolyMatrix::from_fn(target, l.cols(), l.nvars(), |j, k| {
        let mut p = Polynomial::zero(target);
        for (r, &y) in ys.iter().enumerate() {
            let c = l.coefficient(r, j, k);
            if !c.is_zero() {
                p = &p + &Polynomial::var(target, y).scale(c);
            }
        }
        p
    }))
}

/// Checks `Σ_r Y_r ℓ_{rj} = Σ_k X_k jd_{jk}` for every column `j`; `target`
/// holds blocks `x` and `y`.
pub fn jacobian_dual_identity<K: Field>(l: &LinearFormMatrix<K>, jd: &PolyMatrix<K>, target: &RingRef) -> Result<bool> {
    let xs = target.block_vars("x");
    let ys = target.block_vars("y");
    let jd = jd.to_ring(target)?;
    for j in 0..l.cols() {
        let mut lhs = Polynomial::zero(target);
        for (r, &y) in ys.iter().enumerate() {
            lhs = &lhs + &(&Polynomial::var(target, y) * &l.entry_in(r, j, target, &xs));
        }
        let mut rhs = Polynomial::zero(target);
        for (k, &x) in xs.iter().enumerate() {
            rhs = &rhs + &(&Polynomial::var(target, x) * jd.get(j, k));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The matrix `L′` with `ℓ′_{rk} = Σ_j coeff(ℓ_{rj}, X_k)·Z_j`, returned in the
/// variables `X` standing for `Z`; use [`LinearFormMatrix::in_block`] to move it
/// into a `z` block. Requires as many columns as variables.
pub fn dual_linear_matrix<K: Field>(l: &LinearFormMatrix<K>) -> Result<LinearFormMatrix<K>> {
    if l.cols() != l.nvars() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "dual matrix needs m = n + 1, got {} rows in {} variables",
            l.rows(),
            l.nvars()
        )));
    }
    Ok(LinearFormMatrix::from_coefficients(
        l.ring(),
        l.rows(),
        l.nvars(),
        Provenance::Derived(format!("dual of {}", l.provenance())),
        |r, k, j| l.coefficient(r, j, k).clone(),
    ))
}

/// Checks `Σ_r Y_r ℓ′_{rk} = Σ_j Z_j jd_{jk}` for every `k`, in a ring with
/// blocks `y` and `z`.
pub fn dual_identity<K: Field>(dual: &LinearFormMatrix<K>, jd: &PolyMatrix<K>, target: &RingRef) -> Result<bool> {
    let ys = target.block_vars("y");
    let zs = target.block_vars("z");
    let jd = jd.to_ring(target)?;
    for k in 0..dual.cols() {
        let mut lhs = Polynomial::zero(target);
        for (r, &y) in ys.iter().enumerate() {
            lhs = &lhs + &(&Polynomial::var(target, y) * &dual.entry_in(r, k, target, &zs));
        }
        let mut rhs = Polynomial::zero(target);
        for (j, &z) in zs.iter().enumerate() {
            rhs = &rhs + &(&Polynomial::var(target, z) * jd.get(j, k));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transpose of the last differential `∧^{n−1}Rⁿ → ∧^{n−2}Rⁿ ⊗ R^{n+1}` of the
/// complex resolving `I^{n−1}`, with `e_1∧…∧ê_k∧…∧e_n` identified with `e_k`.
/// Column `({a,b}, r)` has `±ℓ_{rb}` in row `a` and `±ℓ_{ra}` in row `b`, with the
/// signs of the exterior differential. Blocks run over pairs `(a,b)` with `b`
/// decreasing from `n` and then `a` decreasing from `b−1`.
pub fn eta_matrix<K: Field>(l: &LinearFormMatrix<K>) -> Result<PolyMatrix<K>> {
    let n = l.nvars();
    if l.cols() != n || l.rows() != n + 1 {
        return Err(AlgebraError::ShapeMismatch(format!(
            "eta needs an (n+1) x n matrix, got {}x{}",
            l.rows(),
            l.cols()
        )));
    }
    let ring = l.ring();
    let mut columns: Vec<Vec<Polynomial<K>>> = Vec::with_capacity((n + 1) * n * (n - 1) / 2);
    for b in (1..n).rev() {
        for a in (0..b).rev() {
            for r in 0..=n {
                let mut col = vec![Polynomial::zero(ring); n];
                // e_{[n]∖a} contributes l = b at position b−1, e_{[n]∖b} contributes l = a at position a
                let pb = l.entry(r, b);
                col[a] = if (b - 1) % 2 == 0 { pb } else { pb.neg() };
                let pa = l.entry(r, a);
                col[b] = if a % 2 == 0 { pa } else { pa.neg() };
                columns.push(col);
            }
        }
    }
    Ok(PolyMatrix::from_fn(ring, n, columns.len(), |i, j| columns[j][i].clone()))
}

/// Dimension of the span of the columns of η, each flattened to its
/// `n·n` coefficients.
pub fn eta_matrix_rank<K: Field>(l: &LinearFormMatrix<K>) -> Result<(PolyMatrix<K>, usize)> {
    let eta = eta_matrix(l)?;
    let n = l.nvars();
    let vectors: Vec<Vec<K>> = (0..eta.cols())
        .map(|j| {
            let mut v = Vec::with_capacity(n * n);
            for i in 0..n {
                for k in 0..n {
                    v.push(eta.get(i, j).linear_coefficient(k));
                }
            }
            v
        })
        .collect();
    Ok((eta, vector_rank(vectors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmat::linear::fixture;
    use crate::ring::{parse_poly, FieldSpec, Rational, RingSpec};

    fn xy_ring(n: usize, m: usize) -> RingRef {
        RingSpec::builder(FieldSpec::Rationals).block("x", n).block("y", m).build().unwrap()
    }

    #[test]
    fn fix_c3_jacobian_dual() {
        let l = fixture::<Rational>("fix-c3", FieldSpec::Rationals).unwrap();
        let ring = xy_ring(3, 3);
        let jd = jacobian_dual(&l, &ring).unwrap();
        let row = |i: usize| jd.row(i).iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(row(0), vec!["y1", "y2", "y3"]);
        assert_eq!(row(1), vec!["y3", "y1", "y2"]);
        assert!(jacobian_dual_identity(&l, &jd, &ring).unwrap());
    }

    #[test]
    fn jacobian_of_squares() {
        let ring = RingSpec::affine(2, FieldSpec::Rationals);
        let g = vec![parse_poly::<Rational>("x1^2", &ring).unwrap(), parse_poly("x2^2", &ring).unwrap()];
        let j = jacobian_matrix(&g, &ring, &[0, 1]).unwrap();
        let s: Vec<String> = j.entries().iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["2*x1", "0", "0", "2*x2"]);
    }

    #[test]
    fn eta_shape_and_tchernev_rank() {
        let t = fixture::<Rational>("tchernev", FieldSpec::Rationals).unwrap();
        let (eta, rank) = eta_matrix_rank(&t).unwrap();
        assert_eq!(eta.shape(), (3, 12));
        assert_eq!(rank, 8);
        let p2 = fixture::<Rational>("tchernev-perturbed-2", FieldSpec::Rationals).unwrap();
        assert_eq!(eta_matrix_rank(&p2).unwrap().1, 9);
    }

    #[test]
    fn dual_is_an_involution() {
        let t = fixture::<Rational>("tchernev-perturbed-2", FieldSpec::Rationals).unwrap();
        let back = dual_linear_matrix(&dual_linear_matrix(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
