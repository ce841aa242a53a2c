//! Rational maps given by forms of equal degree, their images and inverses.

use crate::error::{AlgebraError, Result};
use crate::groebner::{eliminate, Budget, Ideal};
use crate::linmat::{adjugate_det, jacobian_dual, jacobian_matrix, subsets, LinearFormMatrix, MinorTable, PolyMatrix};
use crate::report::Check;
use crate::ring::{Field, Polynomial, RingRef, RingSpec};

/// Coordinates `g_1..g_m` of a rational map, all of one degree.
#[derive(Clone, Debug)]
pub struct RationalMapData<K: Field> {
    coords: Vec<Polynomial<K>>,
    degree: u32,
    gcd_free: bool,
}

impl<K: Field> RationalMapData<K> {
    pub fn new(coords: Vec<Polynomial<K>>) -> Result<Self> {
        let first =
            coords.iter().find(|g| !g.is_zero()).ok_or(AlgebraError::Config("all coordinates are zero".into()))?;
        let ring = first.ring().clone();
        let degree = first.degree().unwrap();
        for g in &coords {
            if !g.is_zero() && (g.degree() != Some(degree) || !g.is_homogeneous_wrt(&vec![1; ring.nvars()])) {
                return Err(AlgebraError::NotHomogeneous(format!("coordinate {g} is not a form of degree {degree}")));
            }
        }
        let coords = coords.iter().map(|g| g.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
        let gcd_free = pairwise_gcd_free(&coords);
        Ok(RationalMapData { coords, degree, gcd_free })
    }

    pub fn coords(&self) -> &[Polynomial<K>] {
        &self.coords
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ring(&self) -> &RingRef {
        self.coords[0].ring()
    }

    /// Result of the pairwise content check (see [`pairwise_gcd_free`]).
    pub fn gcd_free(&self) -> bool {
        self.gcd_free
    }
}

/// A cheap stand-in for a full gcd: no variable divides every coordinate and
/// no nonconstant coordinate divides all the others.
pub fn pairwise_gcd_free<K: Field>(coords: &[Polynomial<K>]) -> bool {
    let nonzero: Vec<&Polynomial<K>> = coords.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.len() <= 1 {
        return nonzero.iter().all(|g| g.is_constant());
    }
    let ring = nonzero[0].ring();
    for v in 0..ring.nvars() {
        if nonzero.iter().all(|g| g.divide_by_var(v).is_some()) {
            return false;
        }
    }
    for (i, g) in nonzero.iter().enumerate() {
        if g.is_constant() {
            continue;
        }
        if nonzero.iter().enumerate().all(|(j, h)| i == j || h.exact_divide(g).is_ok()) {
            return false;
        }
    }
    true
}

/// The ring `k[y1..ym]` used for target coordinates.
pub fn target_ring(m: usize, field: crate::ring::FieldSpec) -> RingRef {
    RingSpec::named("y", m, field)
}

/// Kernel of `k[Y] → k[X]`, `Y_j ↦ g_j`, by eliminating `X` from the graph ideal
/// `(Y_j − g_j)`. The result lives in `k[y1..ym]`.
pub fn image_ideal<K: Field>(g: &RationalMapData<K>, budget: &Budget) -> Result<Ideal<K>> {
    let src = g.ring();
    let m = g.coords().len();
    let graph_ring = RingSpec::builder(src.field()).block("x", src.nvars()).block("y", m).build()?;
    let ys = graph_ring.block_vars("y");
    let xs = graph_ring.block_vars("x");
    let gens = g
        .coords()
        .iter()
        .zip(&ys)
        .map(|(gj, &y)| Ok(&Polynomial::var(&graph_ring, y) - &gj.to_ring(&graph_ring)?))
        .collect::<Result<Vec<_>>>()?;
    let graph = Ideal::new(&graph_ring, gens)?;
    let elim = eliminate(&graph, &xs, budget)?;
    let target = target_ring(m, src.field());
    elim.to_ring(&target)
}

/// A choice of `n−1` rows of the Jacobian dual and the `n` signed maximal
/// minors of that submatrix.
#[derive(Clone, Debug)]
pub struct InverseRepresentative<K: Field> {
    /// Chosen rows of the Jacobian dual, increasing.
    pub rows: Vec<usize>,
    /// Coordinates `f_1..f_n` in `k[y1..ym]`.
    pub coords: Vec<Polynomial<K>>,
}

/// One representative per `(n−1)`-subset `S` of the `m−1` rows of the Jacobian
/// dual `jd`: `f_k = (−1)^{k+σ(S)} det(jd_S without column k)` with `σ(S)` the
/// sum of the omitted row indices (counted from 0). For `m = n+1` and `S` the
/// complement of row `s` this is column `s` of `adj(jd)`.
pub fn inverse_representatives<K: Field>(l: &LinearFormMatrix<K>) -> Result<Vec<InverseRepresentative<K>>> {
    let n = l.nvars();
    let m = l.rows();
    if m < n || n < 3 {
        return Err(AlgebraError::ShapeMismatch(format!("representatives need m >= n >= 3, got m={m} n={n}")));
    }
    let yr = target_ring(m, l.field());
    let jd = jacobian_dual(l, &yr)?;
    representatives_of(&jd)
}

/// Representatives from an explicit `(m−1) × n` Jacobian dual.
pub fn representatives_of<K: Field>(jd: &PolyMatrix<K>) -> Result<Vec<InverseRepresentative<K>>> {
    let (rows, n) = jd.shape();
    if rows + 1 < n {
        return Err(AlgebraError::ShapeMismatch(format!("jacobian dual {rows}x{n} has too few rows")));
    }
    let table = MinorTable::build(jd, n - 1);
    let all_cols = (1u32 << n) - 1;
    let mut out = Vec::new();
    for s in subsets(rows, n - 1) {
        let omitted: usize = (0..rows).filter(|r| s & (1 << r) == 0).sum();
        let coords: Vec<Polynomial<K>> = (0..n)
            .map(|k| {
                let d = table.get(s, all_cols & !(1 << k));
                if (k + omitted).is_multiple_of(2) {
                    d.clone()
                } else {
                    d.neg()
                }
            })
            .collect();
        if coords.iter().all(|c| c.is_zero()) {
            return Err(AlgebraError::Genericity(format!("rows {s:#b} of the jacobian dual have rank below n-1")));
        }
        out.push(InverseRepresentative { rows: (0..rows).filter(|r| s & (1 << r) != 0).collect(), coords });
    }
    Ok(out)
}

/// `D` with `f_i(g) = X_i·D` for every `i`, where `X_i` is the `i`-th variable
/// of the source ring.
pub fn source_inversion_factor<K: Field>(g: &[Polynomial<K>], f: &[Polynomial<K>]) -> Result<Polynomial<K>> {
    let src = g.first().ok_or(AlgebraError::ShapeMismatch("empty map".into()))?.ring().clone();
    if f.len() != src.nvars() {
        return Err(AlgebraError::ShapeMismatch(format!(
            "{} inverse coordinates for {} source variables",
            f.len(),
            src.nvars()
        )));
    }
    let mut factor: Option<Polynomial<K>> = None;
    for (i, fi) in f.iter().enumerate() {
        let images: Vec<Option<Polynomial<K>>> = (0..fi.ring().nvars()).map(|j| g.get(j).cloned()).collect();
        let composed = fi.substitute(&src, &images)?;
        let d = composed.exact_divide(&Polynomial::var(&src, i))?;
        match &factor {
            None => factor = Some(d),
            Some(prev) if *prev == d => {}
            Some(prev) => {
                return Err(AlgebraError::CheckFailed(format!(
                    "inversion factor differs between coordinates: {prev} vs {d}"
                )))
            }
        }
    }
    Ok(factor.unwrap())
}

/// Jacobian identities for a Cremona map `g` with inverse `f` and source
/// inversion factor `D`:
/// `det Θ(f)(g) · det Θ(g) = (deg D + 1)·D^n`, and, when `minors_of_linear`
/// is set, `D = det Θ(g)/(n−1)`.
pub fn cremona_jacobian_identity<K: Field>(
    g: &[Polynomial<K>],
    f: &[Polynomial<K>],
    d: &Polynomial<K>,
    minors_of_linear: bool,
) -> Result<Vec<Check>> {
    let src = d.ring().clone();
    let n = src.nvars();
    let xs: Vec<usize> = (0..n).collect();
    let (det_g, _) = adjugate_det(&jacobian_matrix(g, &src, &xs)?)?;
    let yr = f[0].ring().clone();
    let ys: Vec<usize> = (0..yr.nvars()).collect();
    let theta_f = jacobian_matrix(f, &yr, &ys)?;
    let images: Vec<Option<Polynomial<K>>> = (0..yr.nvars()).map(|j| g.get(j).cloned()).collect();
    let theta_f_g = theta_f.try_map(&src, |p| p.substitute(&src, &images))?;
    let (det_fg, _) = adjugate_det(&theta_f_g)?;
    let lhs = &det_fg * &det_g;
    let deg = d.degree().unwrap_or(0) as i64;
    let rhs = d.pow(n as u32).scale(&K::from_i64(&src.field(), deg + 1));
    let mut checks =
        vec![Check::expect("chain-rule determinant identity", lhs == rhs, || format!("lhs - rhs = {}", &lhs - &rhs))
            .with_detail(format!("factor {} = deg D + 1", deg + 1))];
    if minors_of_linear {
        let expected = det_g.scale(&K::from_i64(&src.field(), n as i64 - 1).inv());
        checks.push(Check::expect("inversion factor equals jacobian determinant / (n-1)", *d == expected, || {
            format!("D = {d}, det/(n-1) = {expected}")
        }));
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmat::{fixture, signed_maximal_minors};
    use crate::ring::{parse_poly, FieldSpec, Rational};

    #[test]
    fn identity_map_has_trivial_factor() {
        let x = RingSpec::affine(3, FieldSpec::Rationals);
        let y = target_ring(3, FieldSpec::Rationals);
        let g: Vec<Polynomial<Rational>> = (0..3).map(|i| Polynomial::var(&x, i)).collect();
        let f: Vec<Polynomial<Rational>> = (0..3).map(|i| Polynomial::var(&y, i)).collect();
        let d = source_inversion_factor(&g, &f).unwrap();
        assert!(d.is_one());
        let checks = cremona_jacobian_identity(&g, &f, &d, false).unwrap();
        assert!(checks.iter().all(|c| c.passed()));
    }

    #[test]
    fn veronese_conic() {
        let x = RingSpec::affine(2, FieldSpec::Rationals);
        let g = RationalMapData::new(
            ["x1^2", "x1*x2", "x2^2"].iter().map(|s| parse_poly::<Rational>(s, &x).unwrap()).collect(),
        )
        .unwrap();
        let img = image_ideal(&g, &Budget::unlimited()).unwrap();
        assert_eq!(img.len(), 1);
        let y = target_ring(3, FieldSpec::Rationals);
        assert_eq!(img.generators()[0].monic(), parse_poly::<Rational>("y1*y3 - y2^2", &y).unwrap().monic());
        let lin = RationalMapData::new(vec![Polynomial::<Rational>::var(&x, 0), Polynomial::var(&x, 1)]).unwrap();
        assert!(image_ideal(&lin, &Budget::unlimited()).unwrap().is_zero());
    }

    #[test]
    fn fix_c3_cremona() {
        let l = fixture::<Rational>("fix-c3", FieldSpec::Rationals).unwrap();
        let delta = signed_maximal_minors(&l).unwrap();
        let reps = inverse_representatives(&l).unwrap();
        assert_eq!(reps.len(), 1);
        let d = source_inversion_factor(&delta, &reps[0].coords).unwrap();
        assert_eq!(d.degree(), Some(3));
        let checks = cremona_jacobian_identity(&delta, &reps[0].coords, &d, true).unwrap();
        for c in &checks {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn gcd_check_sees_common_variable() {
        let x = RingSpec::affine(2, FieldSpec::Rationals);
        let p = |s: &str| parse_poly::<Rational>(s, &x).unwrap();
        assert!(!pairwise_gcd_free(&[p("x1^2"), p("x1*x2")]));
        assert!(!pairwise_gcd_free(&[p("x1 + x2"), p("x1^2 - x2^2")]));
        assert!(pairwise_gcd_free(&[p("x1^2"), p("x2^2"), p("x1*x2")]));
    }
}
