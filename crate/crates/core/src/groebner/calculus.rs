//! Elimination, intersection, quotients and saturation.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::dimension::{monomial_hilbert_series, TPoly};
use super::engine::{normal_form, Budget, GroebnerBasis};
use super::graded::Echelon;
use super::ideal::Ideal;
use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Monomial, MonomialOrder, OrderKind, Polynomial, RingRef};

/// Whether every generator of `a` lies in the ideal with basis `gb`.
pub fn generators_in<K: Field>(a: &Ideal<K>, gb: &GroebnerBasis<K>) -> Result<bool> {
    for g in a.generators() {
        if !normal_form(g, gb, false)?.0.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `a ⊆ b`.
pub fn is_subideal<K: Field>(a: &Ideal<K>, b: &Ideal<K>, budget: &Budget) -> Result<bool> {
    let gb = b.groebner(budget)?;
    generators_in(a, &gb)
}

/// Equality via reduced bases in the ring's order.
pub fn ideals_equal<K: Field>(a: &Ideal<K>, b: &Ideal<K>, budget: &Budget) -> Result<bool> {
    let b = b.to_ring(a.ring())?;
    let ga = a.groebner(budget)?;
    let gb = b.groebner(budget)?;
    Ok(ga.basis() == gb.basis())
}

/// `I ∩ k[remaining variables]`, returned in the original ring.
pub fn eliminate<K: Field>(ideal: &Ideal<K>, vars: &[usize], budget: &Budget) -> Result<Ideal<K>> {
    if vars.is_empty() {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let mask = vars.iter().fold(0u32, |m, &v| m | (1 << v));
    let order = MonomialOrder { kind: OrderKind::Elimination { eliminated: mask }, priority: (0..n).collect() };
    let gb = ideal.groebner_in(&order, budget)?;
    let kept: Vec<Polynomial<K>> =
        gb.basis().iter().filter(|g| g.support_mask() & mask == 0).map(|g| g.to_ring(ring)).collect::<Result<_>>()?;
    Ok(Ideal::from_parts(ring.clone(), kept))
}

/// Moves an ideal free of the variables in `mask` into the ring without them.
pub fn restrict_to_subring<K: Field>(ideal: &Ideal<K>, mask: u32) -> Result<(RingRef, Ideal<K>)> {
    let (sub, _) = ideal.ring().restrict(mask)?;
    let i = ideal.to_ring(&sub)?;
    Ok((sub, i))
}

fn aux_name(ring: &RingRef, base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while ring.var_index(&name).is_some() {
        k += 1;
        name = format!("{base}{k}_");
    }
    name
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect<K: Field>(a: &Ideal<K>, b: &Ideal<K>, budget: &Budget) -> Result<Ideal<K>> {
    let ring = a.ring();
    let b = b.to_ring(ring)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    // containment short cuts
    let gb_b = b.groebner(budget)?;
    if generators_in(a, &gb_b)? {
        return Ok(a.clone());
    }
    let gb_a = a.groebner(budget)?;
    if generators_in(&b, &gb_a)? {
        return Ok(b);
    }
    let ext = ring.extend(&aux_name(ring, "t"), true)?;
    let t = Polynomial::var(&ext, ext.nvars() - 1);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a.generators() {
        gens.push(&t * &f.to_ring(&ext)?);
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.to_ring(&ext)?);
    }
    let big = Ideal::new(&ext, gens)?;
    let elim = eliminate(&big, &[ext.nvars() - 1], budget)?;
    let back = elim.generators().iter().map(|g| g.to_ring(ring)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, back)
}

/// Whether the variable-quotient shortcut applies: `I` homogeneous for the ring
/// weights, every other variable of one common weight not above that of `var`.
fn variable_shortcut_applies<K: Field>(ideal: &Ideal<K>, var: usize) -> bool {
    let w = ideal.ring().weights();
    let wv = w[var];
    let others: Vec<u32> = w.iter().enumerate().filter(|(i, _)| *i != var).map(|(_, &x)| x).collect();
    let uniform = others.windows(2).all(|p| p[0] == p[1]);
    uniform && others.first().is_none_or(|&c| c <= wv) && ideal.is_homogeneous()
}

/// Degrevlex basis with `var` as the smallest variable.
fn gb_with_var_last<K: Field>(ideal: &Ideal<K>, var: usize, budget: &Budget) -> Result<GroebnerBasis<K>> {
    let n = ideal.ring().nvars();
    let mut prio: Vec<usize> = (0..n).filter(|&v| v != var).collect();
    prio.push(var);
    let order = MonomialOrder::degrevlex(n).with_priority(prio);
    ideal.groebner_in(&order, budget)
}

/// Route selector for single-element quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientRoute {
    /// Pick the variable shortcut when it applies, then graded linear algebra
    /// for homogeneous input.
    Auto,
    /// Always go through `I ∩ (g)`.
    Intersection,
}

/// `I : g`.
pub fn quotient_by_element<K: Field>(ideal: &Ideal<K>, g: &Polynomial<K>, budget: &Budget) -> Result<Ideal<K>> {
    quotient_by_element_via(ideal, g, budget, QuotientRoute::Auto)
}

pub fn quotient_by_element_via<K: Field>(
    ideal: &Ideal<K>,
    g: &Polynomial<K>,
    budget: &Budget,
    route: QuotientRoute,
) -> Result<Ideal<K>> {
    let ring = ideal.ring();
    let g = g.to_ring(ring)?;
    if g.is_zero() {
        return Err(AlgebraError::Config("quotient by the zero element".into()));
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    if ideal.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if route == QuotientRoute::Auto {
        if let Some(var) = single_variable(&g) {
            if variable_shortcut_applies(ideal, var) {
                // divide once by the variable wherever it divides the basis element
                let gb = gb_with_var_last(ideal, var, budget)?;
                let gens = gb
                    .basis()
                    .iter()
                    .map(|h| {
                        let h = h.to_ring(ring)?;
                        Ok(h.divide_by_var(var).unwrap_or(h))
                    })
                    .collect::<Result<Vec<_>>>()?;
                return Ideal::new(ring, gens);
            }
        }
    }
    if route == QuotientRoute::Auto {
        let w = ring.weights();
        if ideal.is_homogeneous() && g.is_homogeneous_wrt(w) {
            if let Some(q) = graded_quotient(ideal, &g, budget)? {
                return Ok(q);
            }
        }
    }
    let principal = Ideal::new(ring, vec![g.clone()])?;
    let inter = intersect(ideal, &principal, budget)?;
    let gens = inter.generators().iter().map(|h| h.exact_divide(&g)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// Monomials of the given weighted degree.
fn monomials_of_degree(weights: &[u32], e: u32) -> Vec<Monomial> {
    fn rec(v: usize, weights: &[u32], left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if v + 1 == weights.len() {
            if left.is_multiple_of(weights[v]) {
                cur[v] = left / weights[v];
                out.push(Monomial::from_exponents(cur));
                cur[v] = 0;
            }
            return;
        }
        let mut k = 0;
        while k * weights[v] <= left {
            cur[v] = k;
            rec(v + 1, weights, left - k * weights[v], cur, out);
            k += 1;
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    if !weights.is_empty() {
        rec(0, weights, e, &mut vec![0; weights.len()], &mut out);
    }
    out
}

/// Combinations of the rows that vanish, by elimination on `[rows | identity]`.
/// Each row is a tuple of polynomials compared entrywise.
fn left_kernel<K: Field>(rows: &[Vec<Polynomial<K>>], field: &crate::ring::FieldSpec) -> Vec<Vec<K>> {
    let mut cols: HashMap<(usize, Monomial), usize> = HashMap::new();
    for row in rows {
        for (j, p) in row.iter().enumerate() {
            for t in p.terms() {
                let next = cols.len();
                cols.entry((j, t.mono)).or_insert(next);
            }
        }
    }
    let (nc, nr) = (cols.len(), rows.len());
    let zero = K::from_i64(field, 0);
    let mut mat: Vec<Vec<K>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = vec![zero.clone(); nc + nr];
            for (j, p) in row.iter().enumerate() {
                for t in p.terms() {
                    v[cols[&(j, t.mono)]] = t.coeff.clone();
                }
            }
            v[nc + i] = K::from_i64(field, 1);
            v
        })
        .collect();
    let mut rank = 0;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(rank, p);
        let inv = mat[rank][c].inv();
        for x in mat[rank].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot = mat[rank].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        rank += 1;
    }
    mat.into_iter().skip(rank).map(|r| r[nc..].to_vec()).collect()
}

/// Standard monomials of `gb` in weighted degree `e` together with the
/// combinations `f` of them satisfying `f·g ∈ I` for every `g` in `gens`.
fn quotient_layer<K: Field>(gb: &GroebnerBasis<K>, gens: &[Polynomial<K>], e: u32) -> Result<Vec<Polynomial<K>>> {
    let ring = gb.ring();
    let leads = gb.lead_monomials();
    let one = K::from_i64(&ring.field(), 1);
    let std: Vec<Monomial> =
        monomials_of_degree(ring.weights(), e).into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect();
    let rows = std
        .iter()
        .map(|m| gens.iter().map(|g| normal_form(&g.mul_term(&one, m), gb, false).map(|r| r.0)).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    let mut out = Vec::new();
    for combo in left_kernel(&rows, &ring.field()) {
        let mut f = Polynomial::zero(ring);
        for (c, m) in combo.iter().zip(&std) {
            if !c.is_zero() {
                f = f.add_scaled(&Polynomial::one(ring), c, m);
            }
        }
        if !f.is_zero() {
            out.push(f);
        }
    }
    Ok(out)
}

/// A basis of `(I : J)_e` modulo `I_e` for weighted-homogeneous `I` and `J`.
/// The result is exact in the given degree, no bound on generator degrees is
/// involved.
pub fn quotient_in_degree<K: Field>(
    ideal: &Ideal<K>,
    j: &Ideal<K>,
    e: u32,
    budget: &Budget,
) -> Result<Vec<Polynomial<K>>> {
    let ring = ideal.ring();
    let w = ring.weights();
    if !ideal.is_homogeneous() || !j.generators().iter().all(|g| g.is_homogeneous_wrt(w)) {
        return Err(AlgebraError::Config("degree-wise quotients need homogeneous input".into()));
    }
    let gb = ideal.groebner(budget)?;
    let gens: Vec<Polynomial<K>> = j.generators().iter().map(|g| g.to_ring(ring)).collect::<Result<_>>()?;
    budget.check_time()?;
    quotient_layer(&gb, &gens, e)
}

fn tpoly_sub(a: &TPoly, b: &TPoly) -> TPoly {
    a.add(&TPoly(b.0.iter().map(|c| -c).collect()))
}

/// `I : g` for homogeneous `I` and `g` by linear algebra in each degree: the
/// degree-`e` part is `I_e` plus the combinations `f` of standard monomials with
/// `f·g ≡ 0 mod I`. The answer is accepted once its Hilbert series equals the one
/// forced by `0 → R/(I:g)(−deg g) → R/I → R/(I+(g)) → 0`. `None` if no degree
/// up to the cap closes the gap.
fn graded_quotient<K: Field>(ideal: &Ideal<K>, g: &Polynomial<K>, budget: &Budget) -> Result<Option<Ideal<K>>> {
    let ring = ideal.ring();
    let w = ring.weights().to_vec();
    let n = ring.nvars();
    let gb = ideal.groebner(budget)?;
    let leads = gb.lead_monomials();
    let plus = ideal.sum(&Ideal::new(ring, vec![g.clone()])?)?;
    let plus_leads = plus.groebner(budget)?.lead_monomials();
    let target = tpoly_sub(
        &monomial_hilbert_series(n, &w, &leads).numerator,
        &monomial_hilbert_series(n, &w, &plus_leads).numerator,
    );
    let dg = g.weighted_degree().unwrap_or(0);
    let top = gb.basis().iter().filter_map(|p| p.weighted_degree()).max().unwrap_or(0);
    let cap = top + dg + 2 * n as u32 + 4;
    let mut gens: Vec<Polynomial<K>> = gb.basis().to_vec();
    let mut e = 0;
    let mut bound = top.saturating_sub(dg).max(1);
    loop {
        while e <= bound {
            budget.check_time()?;
            gens.extend(quotient_layer(&gb, std::slice::from_ref(g), e)?);
            e += 1;
        }
        let cand = Ideal::new(ring, gens.clone())?;
        let cand_gb = cand.groebner(budget)?;
        let num = monomial_hilbert_series(n, &w, &cand_gb.lead_monomials()).numerator;
        if num.shift(dg as usize) == target {
            return Ok(Some(cand_gb.to_ideal()));
        }
        gens = cand_gb.basis().to_vec();
        if bound >= cap {
            return Ok(None);
        }
        bound += 1;
    }
}

/// A polynomial `c·x` for one variable `x`.
fn single_variable<K: Field>(g: &Polynomial<K>) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let m = g.lead_monomial()?;
    if m.degree() != 1 {
        return None;
    }
    (0..g.ring().nvars()).find(|&v| m.exponent(v) == 1)
}

/// `I : J = ∩_g (I : g)` over the generators of `J`. Since `I : g` only
/// depends on `g` modulo `I`, the generators are first replaced by their
/// nonzero normal forms, thinned to a linearly independent set.
pub fn ideal_quotient<K: Field>(ideal: &Ideal<K>, j: &Ideal<K>, budget: &Budget) -> Result<Ideal<K>> {
    let j = j.to_ring(ideal.ring())?;
    if j.is_zero() {
        return Err(AlgebraError::Config("quotient by the zero ideal".into()));
    }
    let gb = ideal.groebner(budget)?;
    let mut echelon = Echelon::default();
    for g in j.generators() {
        let r = normal_form(g, &gb, false)?.0;
        if !r.is_zero() {
            echelon.insert(&r);
        }
    }
    if echelon.rank() == 0 {
        return Ok(Ideal::unit(ideal.ring()));
    }
    let mut acc: Option<Ideal<K>> = None;
    for g in echelon.rows() {
        let q = quotient_by_element(ideal, g, budget)?;
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q, budget)?,
        });
    }
    Ok(acc.unwrap())
}

/// Route selector for single-element saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaturationRoute {
    /// Use the reverse-lex shortcut for a variable of a homogeneous ideal, the
    /// auxiliary-variable elimination otherwise.
    Auto,
    /// Always adjoin `u` and eliminate it from `I + (1 − u·g)`.
    Rabinowitsch,
}

/// `I : g^∞`.
pub fn saturate_by_element<K: Field>(ideal: &Ideal<K>, g: &Polynomial<K>, budget: &Budget) -> Result<Ideal<K>> {
    saturate_by_element_via(ideal, g, budget, SaturationRoute::Auto)
}

pub fn saturate_by_element_via<K: Field>(
    ideal: &Ideal<K>,
    g: &Polynomial<K>,
    budget: &Budget,
    route: SaturationRoute,
) -> Result<Ideal<K>> {
    let ring = ideal.ring();
    let g = g.to_ring(ring)?;
    if g.is_zero() {
        return Err(AlgebraError::Config("saturation by the zero element".into()));
    }
    if g.is_constant() || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    if route == SaturationRoute::Auto {
        if let Some(var) = single_variable(&g) {
            if variable_shortcut_applies(ideal, var) {
                let gb = gb_with_var_last(ideal, var, budget)?;
                let gens = gb
                    .basis()
                    .iter()
                    .map(|h| h.to_ring(ring).map(|h| h.strip_variable(var).1))
                    .collect::<Result<Vec<_>>>()?;
                return Ideal::new(ring, gens);
            }
        }
    }
    let ext = ring.extend(&aux_name(ring, "u"), true)?;
    let u = Polynomial::var(&ext, ext.nvars() - 1);
    let mut gens = ideal.generators().iter().map(|f| f.to_ring(&ext)).collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(&ext) - &(&u * &g.to_ring(&ext)?));
    let big = Ideal::new(&ext, gens)?;
    let elim = eliminate(&big, &[ext.nvars() - 1], budget)?;
    let back = elim.generators().iter().map(|h| h.to_ring(ring)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, back)
}

/// `I : J^∞ = ∩_i (I : g_i^∞)` together with the least `s` such that
/// `I : J^s = I : J^(s+1)`.
pub fn saturate<K: Field>(ideal: &Ideal<K>, j: &Ideal<K>, budget: &Budget) -> Result<(Ideal<K>, u32)> {
    saturate_via(ideal, j, budget, SaturationRoute::Auto)
}

pub fn saturate_via<K: Field>(
    ideal: &Ideal<K>,
    j: &Ideal<K>,
    budget: &Budget,
    route: SaturationRoute,
) -> Result<(Ideal<K>, u32)> {
    let j = j.to_ring(ideal.ring())?;
    if j.is_zero() {
        return Err(AlgebraError::Config("saturation by the zero ideal".into()));
    }
    let mut acc: Option<Ideal<K>> = None;
    for g in j.generators() {
        let s = saturate_by_element_via(ideal, g, budget, route)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s, budget)?,
        });
    }
    let sat = acc.unwrap();
    let s = saturation_exponent(ideal, &j, &sat, budget)?;
    Ok((sat, s))
}

/// Least `s` with `J^s · sat ⊆ I`. Since `I : J^s ⊆ sat` always, this is the
/// least `s` with `I : J^s = sat`, which is where the chain `I : J^s` becomes
/// stationary.
pub fn saturation_exponent<K: Field>(ideal: &Ideal<K>, j: &Ideal<K>, sat: &Ideal<K>, budget: &Budget) -> Result<u32> {
    match layer_exponent(ideal, j, sat, budget.max_degree, budget)? {
        Some(s) => Ok(s),
        None => {
            Err(AlgebraError::BudgetExceeded(format!("saturation exponent above {}", budget.max_degree.unwrap_or(0))))
        }
    }
}

/// Walks the layers `J^s · sat` modulo `I`; `None` once `s` passes `cap`.
fn layer_exponent<K: Field>(
    ideal: &Ideal<K>,
    j: &Ideal<K>,
    sat: &Ideal<K>,
    cap: Option<u32>,
    budget: &Budget,
) -> Result<Option<u32>> {
    let gb = ideal.groebner(budget)?;
    let homogeneous = ideal.is_homogeneous() && j.is_homogeneous();
    let mut layer: Vec<Polynomial<K>> =
        sat.generators().iter().map(|p| normal_form(p, &gb, false).map(|r| r.0)).collect::<Result<Vec<_>>>()?;
    let mut s = 0;
    loop {
        budget.check_time()?;
        layer.retain(|p| !p.is_zero());
        if layer.is_empty() {
            return Ok(Some(s));
        }
        if cap.is_some_and(|c| s >= c) {
            return Ok(None);
        }
        // normal forms of homogeneous elements stay homogeneous, so a
        // linear-algebra basis of their span is enough to carry forward
        let mut echelon = Echelon::default();
        let mut next = Vec::new();
        for p in &layer {
            for g in j.generators() {
                let r = normal_form(&(p * g), &gb, false)?.0;
                if r.is_zero() {
                    continue;
                }
                if homogeneous {
                    echelon.insert(&r);
                } else {
                    next.push(r);
                }
            }
        }
        layer = if homogeneous { echelon.rows().to_vec() } else { next };
        s += 1;
    }
}

/// `I : m^∞` for a homogeneous ideal in a standard graded ring, where `m` is the
/// ideal of all variables. It computes `I : a^∞` for a random linear form `a`
/// through a change of coordinates and the reverse-lex shortcut. The inclusion
/// `I : m^∞ ⊆ I : a^∞` always holds, and the returned exponent `s` certifies
/// `m^s · (I : a^∞) ⊆ I`, so the answer is exact. Falls back to the
/// intersection of the saturations by each variable if a few forms fail.
pub fn saturate_by_maximal_ideal<K: Field>(ideal: &Ideal<K>, budget: &Budget) -> Result<(Ideal<K>, u32)> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let all: Vec<usize> = (0..n).collect();
    let m = Ideal::variables(ring, &all);
    if ideal.is_zero() {
        return Ok((ideal.clone(), 0));
    }
    if !ideal.is_homogeneous() || !ring.all_weights_one() {
        return saturate(ideal, &m, budget);
    }
    let cap = 2 * ideal.max_degree().unwrap_or(1) + 2 * n as u32 + 4;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_5a7);
    let last = n - 1;
    for _ in 0..4 {
        let coeffs: Vec<K> = (0..last).map(|_| K::from_i64(&ring.field(), rng.gen_range(1..=997))).collect();
        let shift = |sign: i64| -> Vec<Option<Polynomial<K>>> {
            let mut images: Vec<Option<Polynomial<K>>> = (0..n).map(|v| Some(Polynomial::var(ring, v))).collect();
            let mut xl = Polynomial::var(ring, last);
            for (v, c) in coeffs.iter().enumerate() {
                let c = if sign < 0 { c.neg() } else { c.clone() };
                xl = &xl + &Polynomial::var(ring, v).scale(&c);
            }
            images[last] = Some(xl);
            images
        };
        let (fwd, bwd) = (shift(1), shift(-1));
        let moved = ideal.generators().iter().map(|g| g.substitute(ring, &fwd)).collect::<Result<Vec<_>>>()?;
        let moved = Ideal::new(ring, moved)?;
        let sat_moved = saturate_by_element(&moved, &Polynomial::var(ring, last), budget)?;
        let back = sat_moved.generators().iter().map(|g| g.substitute(ring, &bwd)).collect::<Result<Vec<_>>>()?;
        let back = Ideal::new(ring, back)?;
        if let Some(s) = layer_exponent(ideal, &m, &back, Some(cap), budget)? {
            return Ok((back, s));
        }
    }
    saturate(ideal, &m, budget)
}

/// The chain `I : J, (I : J) : J, …` until it stabilizes; returns the limit and
/// the number of proper steps.
pub fn iterated_quotient<K: Field>(ideal: &Ideal<K>, j: &Ideal<K>, budget: &Budget) -> Result<(Ideal<K>, u32)> {
    let mut cur = ideal.clone();
    let mut s = 0;
    loop {
        let next = ideal_quotient(&cur, j, budget)?;
        if is_subideal(&next, &cur, budget)? {
            return Ok((cur, s));
        }
        cur = next;
        s += 1;
    }
}
