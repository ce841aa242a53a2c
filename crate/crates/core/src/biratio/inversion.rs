//! Inversion data of the birational map given by the maximal minors of an
//! `(n+1) × n` linear matrix, and the resolution of its D-map.

use serde::Serialize;

use super::maps::{representatives_of, source_inversion_factor, target_ring};
use crate::error::{AlgebraError, Result};
use crate::groebner::{krull_dimension, Budget, Ideal};
use crate::linmat::{
    adjugate_det, dual_linear_matrix, jacobian_dual, minors, signed_maximal_minors, LinearFormMatrix, PolyMatrix,
};
use crate::report::Check;
use crate::ring::{Field, Polynomial, RingRef, RingSpec};

/// Everything the symbolic Rees algebra presentation is built from.
///
/// `delta`, `big_d`, `g` and `e` live in the source ring `k[x]`; `delta_prime`
/// and `small_d` live in `k[z]`; `jd` lives in `k[y]`.
#[derive(Clone, Debug)]
pub struct InversionData<K: Field> {
    pub linear: LinearFormMatrix<K>,
    /// The dual matrix, written in the variables `x` standing for `z`.
    pub dual: LinearFormMatrix<K>,
    pub jd: PolyMatrix<K>,
    pub delta: Vec<Polynomial<K>>,
    pub delta_prime: Vec<Polynomial<K>>,
    pub big_d: Vec<Polynomial<K>>,
    pub small_d: Vec<Polynomial<K>>,
    pub g: Polynomial<K>,
    pub e: Polynomial<K>,
    pub z_ring: RingRef,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct Degrees {
    delta: u32,
    #[serde(rename = "deltaPrime")]
    delta_prime: u32,
    #[serde(rename = "D")]
    big_d: u32,
    d: u32,
    #[serde(rename = "G")]
    g: u32,
    #[serde(rename = "E")]
    e: u32,
}

#[derive(Serialize)]
struct InversionJson {
    n: usize,
    delta: Vec<String>,
    #[serde(rename = "deltaPrime")]
    delta_prime: Vec<String>,
    #[serde(rename = "D")]
    big_d: Vec<String>,
    d: Vec<String>,
    #[serde(rename = "G")]
    g: String,
    #[serde(rename = "E")]
    e: String,
    degrees: Degrees,
}

impl<K: Field> InversionData<K> {
    pub fn n(&self) -> usize {
        self.linear.nvars()
    }

    pub fn source_ring(&self) -> &RingRef {
        self.linear.ring()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strs = |v: &[Polynomial<K>]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        let deg = |p: &Polynomial<K>| p.degree().unwrap_or(0);
        let doc = InversionJson {
            n: self.n(),
            delta: strs(&self.delta),
            delta_prime: strs(&self.delta_prime),
            big_d: strs(&self.big_d),
            d: strs(&self.small_d),
            g: self.g.to_string(),
            e: self.e.to_string(),
            degrees: Degrees {
                delta: deg(&self.delta[0]),
                delta_prime: deg(&self.delta_prime[0]),
                big_d: deg(&self.big_d[0]),
                d: deg(&self.small_d[0]),
                g: deg(&self.g),
                e: deg(&self.e),
            },
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}

/// Same polynomial, variables renamed positionally into `target`.
pub(crate) fn rename<K: Field>(p: &Polynomial<K>, target: &RingRef) -> Result<Polynomial<K>> {
    let images: Vec<Option<Polynomial<K>>> =
        (0..p.ring().nvars()).map(|i| (i < target.nvars()).then(|| Polynomial::var(target, i))).collect();
    p.substitute(target, &images)
}

/// `p(images)` where `images[i]` replaces the `i`-th variable of `p`.
pub(crate) fn compose<K: Field>(
    p: &Polynomial<K>,
    images: &[Polynomial<K>],
    target: &RingRef,
) -> Result<Polynomial<K>> {
    let imgs: Vec<Option<Polynomial<K>>> = images.iter().cloned().map(Some).collect();
    p.substitute(target, &imgs)
}

/// Inversion factors `D_s` of the minors map, indexed by the row `s` of the
/// Jacobian dual left out of the representative.
fn factors_by_omitted_row<K: Field>(jd: &PolyMatrix<K>, g: &[Polynomial<K>]) -> Result<Vec<Polynomial<K>>> {
    let rows = jd.rows();
    let mut reps = representatives_of(jd)?;
    reps.sort_by_key(|r| (0..rows).find(|s| !r.rows.contains(s)));
    reps.iter().map(|r| source_inversion_factor(g, &r.coords)).collect()
}

/// The common quotient `h_i / v_i` over all `i`, or an error naming the index
/// where divisibility or agreement breaks.
fn common_quotient<K: Field>(nums: &[Polynomial<K>], dens: &[Polynomial<K>], what: &str) -> Result<Polynomial<K>> {
    let mut out: Option<Polynomial<K>> = None;
    for (i, (h, v)) in nums.iter().zip(dens).enumerate() {
        let q = h.exact_divide(v).map_err(|e| AlgebraError::CheckFailed(format!("{what}: index {}: {e}", i + 1)))?;
        match &out {
            None => out = Some(q),
            Some(prev) if *prev == q => {}
            Some(_) => return Err(AlgebraError::CheckFailed(format!("{what}: quotient at index {} differs", i + 1))),
        }
    }
    out.ok_or(AlgebraError::ShapeMismatch(format!("{what}: nothing to divide")))
}

fn codim_of<K: Field>(polys: &[Polynomial<K>], budget: &Budget) -> Result<i32> {
    let ideal = Ideal::new(polys[0].ring(), polys.to_vec())?;
    Ok(krull_dimension(&ideal, budget)?.codim)
}

/// Builds `Δ, δ, D, d, G, E` for an `(n+1) × n` matrix and verifies the
/// identities tying them together. A coordinate set `D` (or `d`) of
/// codimension other than 2 is a genericity failure.
pub fn build_inversion_data<K: Field>(l: &LinearFormMatrix<K>, budget: &Budget) -> Result<InversionData<K>> {
    let n = l.nvars();
    if l.rows() != n + 1 || l.cols() != n || n < 3 {
        return Err(AlgebraError::ShapeMismatch(format!(
            "inversion data needs an (n+1) x n matrix with n >= 3, got {}x{}",
            l.rows(),
            l.cols()
        )));
    }
    let src = l.ring().clone();
    let yr = target_ring(n + 1, l.field());
    let zr = RingSpec::named("z", n, l.field());
    let mut checks = Vec::new();

    let delta = signed_maximal_minors(l)?;
    let jd = jacobian_dual(l, &yr)?;
    let big_d = factors_by_omitted_row(&jd, &delta)?;
    let dcodim = codim_of(&big_d, budget)?;
    if dcodim != 2 {
        return Err(AlgebraError::Genericity(format!(
            "the inversion factors D_1..D_{n} generate an ideal of codimension {dcodim}, so they share a common divisor"
        )));
    }

    let dual = dual_linear_matrix(l)?;
    let delta_dual = signed_maximal_minors(&dual)?;
    let jd_dual = jacobian_dual(&dual, &yr)?;
    checks.push(Check::expect("dual jacobian is the transpose", jd_dual == jd.transpose(), || {
        "jacobian dual of the dual matrix differs from the transpose".into()
    }));
    let small_d_x = factors_by_omitted_row(&jd_dual, &delta_dual)?;
    let small_d = small_d_x.iter().map(|p| rename(p, &zr)).collect::<Result<Vec<_>>>()?;
    let delta_prime = delta_dual.iter().map(|p| rename(p, &zr)).collect::<Result<Vec<_>>>()?;
    let ddcodim = codim_of(&small_d_x, budget)?;
    if ddcodim != 2 {
        return Err(AlgebraError::Genericity(format!(
            "the factors d_1..d_{n} generate an ideal of codimension {ddcodim}"
        )));
    }

    let xs: Vec<Polynomial<K>> = (0..n).map(|i| Polynomial::var(&src, i)).collect();
    let d_of_d = small_d.iter().map(|p| compose(p, &big_d, &src)).collect::<Result<Vec<_>>>()?;
    let g = common_quotient(&d_of_d, &xs, "d_i(D) / X_i")?;
    let dl_of_d = delta_prime.iter().map(|p| compose(p, &big_d, &src)).collect::<Result<Vec<_>>>()?;
    let e = common_quotient(&dl_of_d, &delta, "delta_j(D) / Delta_j")?;

    let en = e.pow(n as u32 - 1);
    checks.push(Check::expect("G = E^(n-1)", g == en, || format!("G - E^(n-1) = {}", &g - &en)));
    let dd = (n * (n - 1) - 1) as u32;
    let de = (n * (n * (n - 1) - 2)) as u32;
    let deg_ok = big_d.iter().chain(&small_d).all(|p| p.degree() == Some(dd) && p.is_homogeneous());
    checks.push(Check::expect(format!("deg D_i = deg d_i = {dd}"), deg_ok, || {
        let ds: Vec<String> = big_d.iter().chain(&small_d).map(|p| format!("{:?}", p.degree())).collect();
        format!("degrees {}", ds.join(", "))
    }));
    checks.push(Check::expect(format!("deg E = {de}"), e.degree() == Some(de), || format!("deg E = {:?}", e.degree())));
    checks.push(Check::pass("codim (D_1..D_n) = 2").with_detail(format!("codim {dcodim}")));
    checks.push(Check::pass("codim (d_1..d_n) = 2").with_detail(format!("codim {ddcodim}")));
    // X_i^{n(n-1)} G = (X_i^n E)^{n-1}
    let shows = (0..n).all(|i| {
        let lhs = &xs[i].pow((n * (n - 1)) as u32) * &g;
        lhs == (&xs[i].pow(n as u32) * &e).pow(n as u32 - 1)
    });
    checks.push(Check::expect("X_i^(n(n-1)) G = (X_i^n E)^(n-1)", shows, || "power identity fails".into()));

    Ok(InversionData { linear: l.clone(), dual, jd, delta, delta_prime, big_d, small_d, g, e, z_ring: zr, checks })
}

/// Checks the complex `0 → R(−n²) → R(−(n²−1))ⁿ → R(−(n(n−1)−1))ⁿ → R` given by
/// `Xᵗ`, `Ψ = jd(Δ)` and `D`.
pub fn dmap_resolution_check<K: Field>(data: &InversionData<K>, budget: &Budget) -> Result<Vec<Check>> {
    let n = data.n();
    let src = data.source_ring().clone();
    let psi = data.jd.try_map(&src, |p| compose(p, &data.delta, &src))?;
    let xs: Vec<Polynomial<K>> = (0..n).map(|i| Polynomial::var(&src, i)).collect();
    let mut checks = Vec::new();

    let px = psi.mul(&PolyMatrix::column_vector(&src, &xs))?;
    checks.push(Check::expect("Psi * X^t = 0", px.is_zero(), || format!("Psi * X^t = {:?}", strs(px.entries()))));
    let dp = PolyMatrix::row_vector(&src, &data.big_d).mul(&psi)?;
    checks.push(Check::expect("D * Psi = 0", dp.is_zero(), || format!("D * Psi = {:?}", strs(dp.entries()))));

    let (det, adj) = adjugate_det(&psi)?;
    checks.push(Check::expect("det Psi = 0", det.is_zero(), || format!("det Psi = {det}")));
    let mut bad = None;
    'outer: for i in 0..n {
        for k in 0..n {
            if *adj.get(i, k) != &xs[i] * &data.big_d[k] {
                bad = Some((i, k));
                break 'outer;
            }
        }
    }
    checks.push(Check::expect("adj(Psi) = (X_i D_k)", bad.is_none(), || {
        let (i, k) = bad.unwrap();
        format!("entry ({},{}) is {}", i + 1, k + 1, adj.get(i, k))
    }));

    let c_psi = codim_of(&minors(&psi, n - 1)?, budget)?;
    checks.push(Check::expect("codim I_(n-1)(Psi) = 2", c_psi == 2, || format!("codim {c_psi}")));
    let c_x = codim_of(&xs, budget)?;
    checks.push(Check::expect("codim I_1(X) = n", c_x == n as i32, || format!("codim {c_x}")));

    let deg_d = data.big_d[0].degree().unwrap_or(0);
    let deg_psi = psi.entries().iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let uniform = psi.entries().iter().all(|p| p.is_zero() || (p.is_homogeneous() && p.degree() == Some(deg_psi)));
    let shifts = (deg_d + deg_psi + 1, deg_d + deg_psi, deg_d);
    let nn = n as u32;
    let expected = (nn * nn, nn * nn - 1, nn * (nn - 1) - 1);
    checks.push(
        Check::expect("graded shifts", uniform && shifts == expected, || {
            format!("shifts {shifts:?}, expected {expected:?}, uniform entries {uniform}")
        })
        .with_detail(format!("{shifts:?}")),
    );
    Ok(checks)
}

fn strs<K: Field>(ps: &[Polynomial<K>]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

/// The matrix `Ψ = jd(Δ)`.
pub fn psi_matrix<K: Field>(data: &InversionData<K>) -> Result<PolyMatrix<K>> {
    let src = data.source_ring().clone();
    data.jd.try_map(&src, |p| compose(p, &data.delta, &src))
}
