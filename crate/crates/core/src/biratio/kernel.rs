//! The presentation 𝒫 of the symbolic Rees algebra for `m = n + 1`.

use super::inversion::{build_inversion_data, compose, rename, InversionData};
use crate::error::{AlgebraError, Result};
use crate::groebner::{eliminate, ideal_quotient, ideals_equal, krull_dimension, lift_into_power, Budget, Ideal};
use crate::linmat::{adjugate_det, LinearFormMatrix};
use crate::report::Check;
use crate::ring::{Field, MonomialOrder, Polynomial, RingRef, RingSpec};

/// `Q_i ∈ k[y, z]` with `Q_i(δ(Z), Z) = d_i(Z)`, read off a lift of `d_i` into
/// `(δ)^{n−2}`: each product `δ^e` is replaced by `Y^e`.
pub fn q_polynomials<K: Field>(data: &InversionData<K>, budget: &Budget) -> Result<(RingRef, Vec<Polynomial<K>>)> {
    let n = data.n();
    let field = data.source_ring().field();
    let yz = RingSpec::builder(field).block("y", n + 1).block("z", n).build()?;
    let z_images: Vec<Polynomial<K>> = (0..n).map(|i| Polynomial::var(&yz, n + 1 + i)).collect();
    let delta_yz = data.delta_prime.iter().map(|p| compose(p, &z_images, &yz)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(n);
    for (i, di) in data.small_d.iter().enumerate() {
        let lift = lift_into_power(di, &data.delta_prime, n as u32 - 2, budget)?;
        let mut q = Polynomial::zero(&yz);
        for term in &lift {
            if term.coeff.is_zero() {
                continue;
            }
            let mut p = compose(&term.coeff, &z_images, &yz)?;
            for (j, &e) in term.exponents.iter().enumerate() {
                if e > 0 {
                    p = &p * &Polynomial::var(&yz, j).pow(e);
                }
            }
            q = &q + &p;
        }
        // Y_j ↦ δ_j(Z) must give back d_i
        let mut images: Vec<Polynomial<K>> = delta_yz.clone();
        images.extend(z_images.iter().cloned());
        let back = compose(&q, &images, &yz)?;
        if back != compose(di, &z_images, &yz)? {
            return Err(AlgebraError::CheckFailed(format!("Q_{} does not specialize to d_{}", i + 1, i + 1)));
        }
        out.push(q);
    }
    Ok((yz, out))
}

/// A labeled block of generators of 𝒫.
#[derive(Clone, Debug)]
pub struct GeneratorBlock<K: Field> {
    pub label: &'static str,
    pub gens: Vec<Polynomial<K>>,
}

#[derive(Clone, Debug)]
pub struct KernelPresentation<K: Field> {
    /// `k[x, y, z, w]` with `w` of weight `n − 1`.
    pub ring: RingRef,
    pub data: InversionData<K>,
    pub q: Vec<Polynomial<K>>,
    pub blocks: Vec<GeneratorBlock<K>>,
    pub checks: Vec<Check>,
}

impl<K: Field> KernelPresentation<K> {
    pub fn generators(&self) -> Vec<Polynomial<K>> {
        self.blocks.iter().flat_map(|b| b.gens.iter().cloned()).collect()
    }

    pub fn ideal(&self) -> Result<Ideal<K>> {
        Ideal::new(&self.ring, self.generators())
    }

    pub fn counts(&self) -> Vec<(&'static str, usize)> {
        self.blocks.iter().map(|b| (b.label, b.gens.len())).collect()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// The five blocks of 𝒫 without any verification.
pub fn kernel_generators<K: Field>(
    data: &InversionData<K>,
    q: &[Polynomial<K>],
) -> Result<(RingRef, Vec<GeneratorBlock<K>>)> {
    let n = data.n();
    let field = data.source_ring().field();
    let ring = RingSpec::kernel_ring(n, n as u32 - 1, field)?;
    let x = |i: usize| Polynomial::var(&ring, i);
    let y = |j: usize| Polynomial::var(&ring, n + j);
    let z = |k: usize| Polynomial::var(&ring, 2 * n + 1 + k);
    let w = Polynomial::var(&ring, 3 * n + 1);
    let y_images: Vec<Polynomial<K>> = (0..=n).map(y).collect();
    let z_images: Vec<Polynomial<K>> = (0..n).map(z).collect();
    let jd = data.jd.try_map(&ring, |p| compose(p, &y_images, &ring))?;

    let lin_x = (0..n).map(|j| (0..n).fold(Polynomial::zero(&ring), |acc, k| &acc + &(&x(k) * jd.get(j, k)))).collect();
    let lin_z = (0..n).map(|k| (0..n).fold(Polynomial::zero(&ring), |acc, j| &acc + &(&z(j) * jd.get(j, k)))).collect();
    let (_, adj) = adjugate_det(&jd)?;
    let mut rank_drop = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            rank_drop.push(&(&x(i) * &z(k)) - adj.get(i, k));
        }
    }
    let yw = (0..=n)
        .map(|j| Ok(&(&y(j) * &w) - &compose(&data.delta_prime[j], &z_images, &ring)?))
        .collect::<Result<Vec<_>>>()?;
    let mut yz_images = y_images.clone();
    yz_images.extend(z_images.iter().cloned());
    let xw = (0..n).map(|i| Ok(&(&x(i) * &w) - &compose(&q[i], &yz_images, &ring)?)).collect::<Result<Vec<_>>>()?;
    let blocks = vec![
        GeneratorBlock { label: "lin-X", gens: lin_x },
        GeneratorBlock { label: "lin-Z", gens: lin_z },
        GeneratorBlock { label: "rank-drop", gens: rank_drop },
        GeneratorBlock { label: "yw", gens: yw },
        GeneratorBlock { label: "xw", gens: xw },
    ];
    Ok((ring, blocks))
}

/// Images of `x, y, z, w` under `π`: `X ↦ X`, `Y_j ↦ Δ_j t`, `Z_r ↦ D_r t^{n−1}`,
/// `W ↦ E t^{n(n−1)−1}` in `k[x, t]`.
pub fn pi_images<K: Field>(data: &InversionData<K>) -> Result<(RingRef, Vec<Polynomial<K>>)> {
    let n = data.n();
    let xt = RingSpec::builder(data.source_ring().field()).block("x", n).single("t").build()?;
    let t = Polynomial::var(&xt, n);
    let mut images: Vec<Polynomial<K>> = (0..n).map(|i| Polynomial::var(&xt, i)).collect();
    for d in &data.delta {
        images.push(&rename(d, &xt)? * &t);
    }
    let tn1 = t.pow(n as u32 - 1);
    for d in &data.big_d {
        images.push(&rename(d, &xt)? * &tn1);
    }
    images.push(&rename(&data.e, &xt)? * &t.pow((n * (n - 1) - 1) as u32));
    Ok((xt, images))
}

/// Assembles 𝒫 for an `(n+1) × n` matrix and checks that every generator lies
/// in the kernel of `π` and that 𝒫 has codimension `2n + 1`.
pub fn kernel_presentation<K: Field>(l: &LinearFormMatrix<K>, budget: &Budget) -> Result<KernelPresentation<K>> {
    let data = build_inversion_data(l, budget)?;
    kernel_presentation_from(data, budget)
}

pub fn kernel_presentation_from<K: Field>(data: InversionData<K>, budget: &Budget) -> Result<KernelPresentation<K>> {
    let n = data.n();
    let (_, q) = q_polynomials(&data, budget)?;
    let (ring, blocks) = kernel_generators(&data, &q)?;
    let mut checks = Vec::new();

    let counts: Vec<usize> = blocks.iter().map(|b| b.gens.len()).collect();
    let expected = vec![n, n, n * n, n + 1, n];
    checks.push(Check::expect("block sizes", counts == expected, || format!("{counts:?}, expected {expected:?}")));

    let q_deg = (2 * n - 3) as u32;
    checks.push(Check::expect(format!("deg Q_i = {q_deg}"), q.iter().all(|p| p.degree() == Some(q_deg)), || {
        format!("degrees {:?}", q.iter().map(|p| p.degree()).collect::<Vec<_>>())
    }));

    let (xt, images) = pi_images(&data)?;
    let opt: Vec<Option<Polynomial<K>>> = images.into_iter().map(Some).collect();
    let mut failures = Vec::new();
    for b in &blocks {
        for (idx, g) in b.gens.iter().enumerate() {
            if !g.substitute(&xt, &opt)?.is_zero() {
                failures.push(format!("{}[{}]", b.label, idx + 1));
            }
        }
    }
    let total: usize = counts.iter().sum();
    checks.push(
        Check::expect("every generator vanishes under pi", failures.is_empty(), || failures.join(", "))
            .with_detail(format!("{total} generators")),
    );

    let ideal = Ideal::new(&ring, blocks.iter().flat_map(|b| b.gens.iter().cloned()).collect())?;
    let dim = krull_dimension(&ideal, budget)?;
    let want = 2 * n as i32 + 1;
    checks.push(
        Check::expect(format!("codim P = {want}"), dim.codim == want, || format!("codim {}", dim.codim))
            .with_detail(format!("codim {}", dim.codim)),
    );
    let mut checks_all = data.checks.clone();
    checks_all.extend(checks);
    Ok(KernelPresentation { ring, data, q, blocks, checks: checks_all })
}

/// `(𝒫 : W) = 𝒫`, plus whether `W` divides a lead term of the reduced basis in
/// degrevlex with `z > y > x > w`.
pub fn w_nzd_check<K: Field>(p: &KernelPresentation<K>, budget: &Budget) -> Result<Vec<Check>> {
    let ideal = p.ideal()?;
    let ring = &p.ring;
    let w_var = ring.nvars() - 1;
    let w = Polynomial::var(ring, w_var);
    let quot = ideal_quotient(&ideal, &Ideal::new(ring, vec![w])?, budget)?;
    let equal = ideals_equal(&quot, &ideal, budget)?;
    let mut checks = vec![Check::expect("(P : W) = P", equal, || {
        let gb = ideal.groebner(budget);
        let extra = gb.ok().and_then(|gb| {
            quot.generators().iter().find(|g| crate::groebner::reduce(g, &gb).is_ok_and(|r| !r.is_zero())).cloned()
        });
        format!("quotient contains {} outside P", extra.map_or("an element".into(), |g| g.to_string()))
    })];

    let prio: Vec<usize> = ["z", "y", "x", "w"].iter().flat_map(|b| ring.block_vars(b)).collect();
    let order = MonomialOrder::degrevlex(ring.nvars()).with_priority(prio);
    let gb = ideal.groebner_in(&order, budget)?;
    let divisible: Vec<String> = gb
        .basis()
        .iter()
        .filter(|g| g.lead_monomial().is_some_and(|m| m.exponent(w_var) > 0))
        .map(|g| g.to_string())
        .collect();
    checks.push(
        Check::expect("no lead term divisible by W", divisible.is_empty(), || divisible.join("; "))
            .with_detail(format!("{} basis elements", gb.len())),
    );
    Ok(checks)
}

/// Codimension of `𝒫` after inverting `W`: adjoin `v` with `v·W − 1` and
/// eliminate `v`, leaving `𝒫 : W^∞` in `k[x, y, z, w]`.
pub fn localized_codimension<K: Field>(p: &KernelPresentation<K>, budget: &Budget) -> Result<i32> {
    let ring = &p.ring;
    let ext = ring.extend("v", true)?;
    let w_var = ring.nvars() - 1;
    let v_var = ext.nvars() - 1;
    let v = Polynomial::var(&ext, v_var);
    let mut gens = p.generators().iter().map(|g| g.to_ring(&ext)).collect::<Result<Vec<_>>>()?;
    gens.push(&(&v * &Polynomial::var(&ext, w_var)) - &Polynomial::one(&ext));
    let big = Ideal::new(&ext, gens)?;
    let elim = eliminate(&big, &[v_var], budget)?;
    Ok(krull_dimension(&elim.to_ring(ring)?, budget)?.codim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmat::{random_general_matrix, MatrixSpec};
    use crate::ring::{parse_poly, FieldSpec, Fp};

    fn presentation(seed: u64) -> KernelPresentation<Fp> {
        let spec = MatrixSpec::new(4, 3, FieldSpec::prime(32003).unwrap(), seed);
        let (l, _) = random_general_matrix::<Fp>(&spec, &Budget::unlimited()).unwrap();
        kernel_presentation(&l, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn n3_presentation() {
        let p = presentation(3);
        for c in &p.checks {
            assert!(c.passed(), "{c:?}");
        }
        assert_eq!(p.generators().len(), 22);
        let w = w_nzd_check(&p, &Budget::unlimited()).unwrap();
        for c in &w {
            assert!(c.passed(), "{c:?}");
        }
        assert_eq!(localized_codimension(&p, &Budget::unlimited()).unwrap(), 7);
    }

    #[test]
    fn n3_hilbert_series_with_w_of_weight_two() {
        let p = presentation(5);
        let ideal = p.ideal().unwrap();
        let h = crate::groebner::hilbert_series(&ideal, p.ring.weights(), &Budget::unlimited()).unwrap();
        assert_eq!(h.to_string(), "(1+7*t+13*t^2+7*t^3+t^4)/(1-t)^3*(1-t^2)");
        // no linear forms in P, so degree one is spanned by the ten variables of weight one
        assert_eq!(h.coefficient(1), 10);
        for d in 0..6u32 {
            let monos =
                crate::groebner::dimension::standard_monomial_count(p.ring.nvars(), p.ring.weights(), &[], d) as i128;
            let in_ideal = crate::groebner::graded_dimension(&ideal, d).unwrap() as i128;
            assert_eq!(h.coefficient(d as usize), monos - in_ideal, "degree {d}");
        }
    }

    #[test]
    fn quotient_by_w_detects_a_factor() {
        let ring = RingSpec::kernel_ring(3, 2, FieldSpec::Rationals).unwrap();
        let i = Ideal::new(&ring, vec![parse_poly::<crate::ring::Rational>("w*x1", &ring).unwrap()]).unwrap();
        let q = ideal_quotient(
            &i,
            &Ideal::new(&ring, vec![Polynomial::var_named(&ring, "w")]).unwrap(),
            &Budget::unlimited(),
        )
        .unwrap();
        assert!(!ideals_equal(&q, &i, &Budget::unlimited()).unwrap());
        assert_eq!(q.generators()[0].to_string(), "x1");
    }
}
