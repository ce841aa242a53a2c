//! Buchberger's algorithm with the sugar strategy and the Gebauer–Möller
//! installation of criteria.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use super::bucket::GeoBucket;
use super::ideal::Ideal;
use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Monomial, MonomialOrder, OrderKind, Polynomial, RingRef, Term};

/// Resource limits for a computation. Exceeding any limit is an error, never a
/// silently wrong answer.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    /// Largest sugar degree of a pair the engine may process.
    pub max_degree: Option<u32>,
    /// Cap on reduction steps per basis computation.
    pub max_steps: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_secs(secs: f64) -> Self {
        Budget { deadline: Some(Instant::now() + Duration::from_secs_f64(secs)), ..Budget::default() }
    }

    pub fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(AlgebraError::BudgetExceeded("wall-clock deadline reached".into())),
            _ => Ok(()),
        }
    }
}

/// Engine switches beyond the budget.
#[derive(Clone, Debug, Default)]
pub struct GbOptions {
    /// Record how every basis element is built from the input generators.
    pub track_cofactors: bool,
    /// Ignore pairs of sugar above this degree. For homogeneous input the result
    /// is a basis of the ideal up to that degree.
    pub truncate_degree: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GbStats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub reduction_steps: u64,
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted ascending by lead term.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field> {
    ring: RingRef,
    basis: Vec<Polynomial<K>>,
    cofactors: Option<Vec<Vec<Polynomial<K>>>>,
    generators: Vec<Polynomial<K>>,
    truncated_at: Option<u32>,
    stats: GbStats,
}

impl<K: Field> GroebnerBasis<K> {
    /// The ring of the basis; it carries the basis' monomial order.
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial<K>] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// `cofactors()[i][k]` is the coefficient of generator `k` in basis element `i`.
    pub fn cofactors(&self) -> Option<&[Vec<Polynomial<K>>]> {
        self.cofactors.as_deref()
    }

    /// The generators the basis was computed from, in the basis ring.
    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    pub fn truncated_at(&self) -> Option<u32> {
        self.truncated_at
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lead_monomial().unwrap()).collect()
    }

    /// True for the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn to_ideal(&self) -> Ideal<K> {
        Ideal::from_parts(self.ring.clone(), self.basis.clone())
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    /// `None` marks an input generator waiting to be reduced and inserted.
    j: Option<usize>,
    lcm: Monomial,
    sugar: u32,
}

/// Polynomials available as reducers, with cached lead data.
pub(crate) struct Reducers<K: Field> {
    pub polys: Vec<Vec<Term<K>>>,
    pub leads: Vec<Monomial>,
    pub masks: Vec<u32>,
    pub sugar: Vec<u32>,
    pub cofs: Option<Vec<Vec<Polynomial<K>>>>,
}

impl<K: Field> Reducers<K> {
    fn new(track: bool) -> Self {
        Reducers {
            polys: Vec::new(),
            leads: Vec::new(),
            masks: Vec::new(),
            sugar: Vec::new(),
            cofs: if track { Some(Vec::new()) } else { None },
        }
    }

    fn push(&mut self, terms: Vec<Term<K>>, sugar: u32, cof: Option<Vec<Polynomial<K>>>) -> usize {
        let lead = terms[0].mono;
        debug_assert!(terms[0].coeff.is_one());
        self.leads.push(lead);
        self.masks.push(lead.support_mask());
        self.sugar.push(sugar);
        self.polys.push(terms);
        if let Some(c) = self.cofs.as_mut() {
            c.push(cof.expect("cofactors required"));
        }
        self.polys.len() - 1
    }

    #[inline]
    fn find(&self, active: &[usize], m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        active.iter().copied().find(|&k| self.masks[k] & !mask == 0 && self.leads[k].divides(m))
    }
}

/// Result of a full reduction.
pub(crate) struct Reduced<K: Field> {
    pub terms: Vec<Term<K>>,
    pub sugar: u32,
    pub cof: Option<Vec<Polynomial<K>>>,
}

pub(crate) struct StepCounter<'b> {
    pub steps: u64,
    pub budget: &'b Budget,
}

impl StepCounter<'_> {
    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if let Some(cap) = self.budget.max_steps {
            if self.steps > cap {
                return Err(AlgebraError::BudgetExceeded(format!("more than {cap} reduction steps")));
            }
        }
        if self.steps.is_multiple_of(4096) {
            self.budget.check_time()?;
        }
        Ok(())
    }
}

/// Fully reduces `terms` (descending) by the reducers listed in `active`.
pub(crate) fn reduce_full<K: Field>(
    order: &MonomialOrder,
    red: &Reducers<K>,
    active: &[usize],
    terms: Vec<Term<K>>,
    sugar: u32,
    mut cof: Option<Vec<Polynomial<K>>>,
    counter: &mut StepCounter<'_>,
) -> Result<Reduced<K>> {
    let mut bucket = GeoBucket::new(order);
    bucket.add_ascending(terms.into_iter().rev().collect());
    let mut rem = Vec::new();
    let mut sugar = sugar;
    while let Some(t) = bucket.pop_lead() {
        match red.find(active, &t.mono) {
            Some(k) => {
                counter.tick()?;
                let m = t.mono.div(&red.leads[k]);
                let c = t.coeff.neg();
                bucket.add_scaled_descending(&red.polys[k], 1, &c, &m);
                sugar = sugar.max(m.degree() + red.sugar[k]);
                if let (Some(cf), Some(rc)) = (cof.as_mut(), red.cofs.as_ref()) {
                    for (a, b) in cf.iter_mut().zip(rc[k].iter()) {
                        *a = a.add_scaled(b, &c, &m);
                    }
                }
            }
            None => rem.push(t),
        }
    }
    Ok(Reduced { terms: rem, sugar, cof })
}

fn make_monic<K: Field>(r: &mut Reduced<K>) {
    let lc = r.terms[0].coeff.clone();
    if lc.is_one() {
        return;
    }
    let inv = lc.inv();
    for t in r.terms.iter_mut() {
        t.coeff = t.coeff.mul(&inv);
    }
    if let Some(cf) = r.cof.as_mut() {
        for c in cf.iter_mut() {
            *c = c.scale(&inv);
        }
    }
}

struct Engine<'b, K: Field> {
    ring: RingRef,
    red: Reducers<K>,
    active: Vec<usize>,
    is_active: Vec<bool>,
    pairs: BTreeMap<u32, Vec<Pair>>,
    gens: Vec<Vec<Term<K>>>,
    gen_cofs: Vec<Option<Vec<Polynomial<K>>>>,
    counter: StepCounter<'b>,
    options: GbOptions,
    stats: GbStats,
    skipped_by_truncation: bool,
    /// Select pairs by least lcm alone instead of by sugar first.
    normal_selection: bool,
}

impl<'b, K: Field> Engine<'b, K> {
    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let di = lcm.degree() - self.red.leads[i].degree();
        let dj = lcm.degree() - self.red.leads[j].degree();
        (self.red.sugar[i] + di).max(self.red.sugar[j] + dj)
    }

    fn push_pair(&mut self, pair: Pair) {
        let key = if self.normal_selection { 0 } else { pair.sugar };
        self.pairs.entry(key).or_default().push(pair);
    }

    /// Pops the pair of least sugar, ties broken by the smallest lcm and then by
    /// indices. Under normal selection sugar is ignored.
    fn pop_pair(&mut self) -> Option<(u32, Pair)> {
        let (&key, bucket) = self.pairs.iter_mut().next()?;
        let order = self.ring.order();
        let mut best = 0;
        for k in 1..bucket.len() {
            let a = &bucket[k];
            let b = &bucket[best];
            let ord = order.cmp(&a.lcm, &b.lcm).then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == std::cmp::Ordering::Less {
                best = k;
            }
        }
        let pair = bucket.swap_remove(best);
        if bucket.is_empty() {
            self.pairs.remove(&key);
        }
        Some((pair.sugar, pair))
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> (Vec<Term<K>>, Option<Vec<Polynomial<K>>>) {
        let order = self.ring.order();
        let mi = lcm.div(&self.red.leads[i]);
        let mj = lcm.div(&self.red.leads[j]);
        let one = self.red.polys[i][0].coeff.clone();
        let a = Polynomial::from_sorted(&self.ring, self.red.polys[i][1..].to_vec()).mul_term(&one, &mi);
        let b = Polynomial::from_sorted(&self.ring, self.red.polys[j][1..].to_vec());
        let s = a.add_scaled(&b, &one.neg(), &mj);
        debug_assert!(s.terms().windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono).is_gt()));
        let cof = self.red.cofs.as_ref().map(|cofs| {
            cofs[i]
                .iter()
                .zip(cofs[j].iter())
                .map(|(ci, cj)| ci.mul_term(&one, &mi).add_scaled(cj, &one.neg(), &mj))
                .collect()
        });
        (s.into_terms(), cof)
    }

    /// Gebauer–Möller update after inserting basis element `k`.
    fn update(&mut self, k: usize) {
        let hk = self.red.leads[k];
        // candidate pairs (i, k)
        let cands: Vec<(usize, Monomial, bool)> =
            self.active.iter().map(|&i| (i, self.red.leads[i].lcm(&hk), self.red.leads[i].is_coprime(&hk))).collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, c) in cands.iter().enumerate() {
            let divided_by_rest = cands[idx + 1..].iter().any(|d| d.1.divides(&c.1));
            let divided_by_kept = kept.iter().any(|d| d.1.divides(&c.1));
            if c.2 || (!divided_by_rest && !divided_by_kept) {
                kept.push(*c);
            }
        }
        // chain criterion on old pairs
        let leads = &self.red.leads;
        for bucket in self.pairs.values_mut() {
            bucket.retain(|p| {
                let j = match p.j {
                    None => return true,
                    Some(j) => j,
                };
                !(hk.divides(&p.lcm) && leads[p.i].lcm(&hk) != p.lcm && leads[j].lcm(&hk) != p.lcm)
            });
        }
        self.pairs.retain(|_, b| !b.is_empty());
        for (i, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            let sugar = self.pair_sugar(i, k, &lcm);
            self.push_pair(Pair { i, j: Some(k), lcm, sugar });
        }
        // drop basis elements whose lead is a multiple of the new one
        let leads = &self.red.leads;
        let is_active = &mut self.is_active;
        self.active.retain(|&i| {
            let keep = !hk.divides(&leads[i]);
            if !keep {
                is_active[i] = false;
            }
            keep
        });
        self.active.push(k);
        self.is_active.push(true);
        debug_assert_eq!(self.is_active.len(), self.red.polys.len());
    }

    fn insert(&mut self, mut r: Reduced<K>) {
        make_monic(&mut r);
        let k = self.red.push(r.terms, r.sugar, r.cof);
        self.update(k);
    }

    fn run(&mut self) -> Result<()> {
        while let Some((sugar, pair)) = self.pop_pair() {
            if let Some(t) = self.options.truncate_degree {
                if sugar > t {
                    self.skipped_by_truncation = true;
                    continue;
                }
            }
            if let Some(cap) = self.counter.budget.max_degree {
                if sugar > cap {
                    return Err(AlgebraError::BudgetExceeded(format!("pair of degree {sugar} exceeds cap {cap}")));
                }
            }
            self.counter.budget.check_time()?;
            self.stats.pairs_processed += 1;
            let (terms, cof) = match pair.j {
                None => (std::mem::take(&mut self.gens[pair.i]), self.gen_cofs[pair.i].take()),
                Some(j) => self.spoly(pair.i, j, &pair.lcm),
            };
            if terms.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            let r = reduce_full(self.ring.order(), &self.red, &self.active, terms, sugar, cof, &mut self.counter)?;
            if r.terms.is_empty() {
                self.stats.zero_reductions += 1;
                continue;
            }
            if r.terms[0].mono.is_one() {
                // unit ideal: no need to continue
                self.pairs.clear();
                self.insert(r);
                break;
            }
            self.insert(r);
        }
        Ok(())
    }

    fn finish(mut self, generators: Vec<Polynomial<K>>) -> Result<GroebnerBasis<K>> {
        let order = self.ring.order().clone();
        let mut active = self.active.clone();
        active.sort_by(|&a, &b| order.cmp(&self.red.leads[a], &self.red.leads[b]));
        let mut basis = Vec::with_capacity(active.len());
        let mut cofs = self.red.cofs.as_ref().map(|_| Vec::with_capacity(active.len()));
        for &k in &active {
            let head = self.red.polys[k][0].clone();
            let tail = self.red.polys[k][1..].to_vec();
            let cof = self.red.cofs.as_ref().map(|c| c[k].clone());
            let others: Vec<usize> = active.iter().copied().filter(|&o| o != k).collect();
            // The cofactors of `head + tail` reduce along with the tail.
            let r = reduce_full(&order, &self.red, &others, tail, 0, cof, &mut self.counter)?;
            let mut terms = Vec::with_capacity(r.terms.len() + 1);
            terms.push(head);
            terms.extend(r.terms);
            basis.push(Polynomial::from_sorted(&self.ring, terms));
            if let (Some(out), Some(c)) = (cofs.as_mut(), r.cof) {
                out.push(c);
            }
        }
        self.stats.reduction_steps = self.counter.steps;
        Ok(GroebnerBasis {
            ring: self.ring,
            basis,
            cofactors: cofs,
            generators,
            truncated_at: if self.skipped_by_truncation { self.options.truncate_degree } else { None },
            stats: self.stats,
        })
    }
}

/// Reduced Gröbner basis of `ideal` in `order`.
pub fn groebner_basis<K: Field>(ideal: &Ideal<K>, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<K>> {
    groebner_basis_with(ideal, order, budget, &GbOptions::default())
}

pub fn groebner_basis_with<K: Field>(
    ideal: &Ideal<K>,
    order: &MonomialOrder,
    budget: &Budget,
    options: &GbOptions,
) -> Result<GroebnerBasis<K>> {
    let ring = ideal.ring().with_order(order.clone());
    let generators: Vec<Polynomial<K>> = ideal.generators().iter().map(|g| g.to_ring(&ring)).collect::<Result<_>>()?;
    let ngens = generators.len();
    let track = options.track_cofactors;
    let mut engine = Engine {
        ring: ring.clone(),
        red: Reducers::new(track),
        active: Vec::new(),
        is_active: Vec::new(),
        pairs: BTreeMap::new(),
        gens: Vec::with_capacity(ngens),
        gen_cofs: Vec::with_capacity(ngens),
        counter: StepCounter { steps: 0, budget },
        options: options.clone(),
        stats: GbStats::default(),
        skipped_by_truncation: false,
        normal_selection: order.kind != OrderKind::Degrevlex && !ideal.is_homogeneous(),
    };
    for (k, g) in generators.iter().enumerate() {
        let sugar = g.degree().unwrap_or(0);
        engine.gens.push(g.terms().to_vec());
        engine.gen_cofs.push(if track {
            Some((0..ngens).map(|l| if l == k { Polynomial::one(&ring) } else { Polynomial::zero(&ring) }).collect())
        } else {
            None
        });
        engine.push_pair(Pair { i: k, j: None, lcm: g.lead_monomial().unwrap_or(Monomial::ONE), sugar });
    }
    engine.run()?;
    engine.finish(generators)
}

/// Division with remainder by a reduced basis. Among several applicable
/// reducers the one with the smallest index (smallest lead term) is used.
pub fn normal_form<K: Field>(
    f: &Polynomial<K>,
    gb: &GroebnerBasis<K>,
    with_cofactors: bool,
) -> Result<(Polynomial<K>, Option<Vec<Polynomial<K>>>)> {
    let ring = gb.ring();
    let f = f.to_ring(ring)?;
    let order = ring.order();
    let leads: Vec<Monomial> = gb.lead_monomials();
    let masks: Vec<u32> = leads.iter().map(|m| m.support_mask()).collect();
    let mut quotients: Vec<Vec<Term<K>>> = vec![Vec::new(); gb.len()];
    let mut bucket = GeoBucket::new(order);
    bucket.add_ascending(f.terms().iter().rev().cloned().collect());
    let mut rem = Vec::new();
    while let Some(t) = bucket.pop_lead() {
        let mask = t.mono.support_mask();
        let hit = (0..leads.len()).find(|&k| masks[k] & !mask == 0 && leads[k].divides(&t.mono));
        match hit {
            Some(k) => {
                let m = t.mono.div(&leads[k]);
                bucket.add_scaled_descending(gb.basis()[k].terms(), 1, &t.coeff.neg(), &m);
                if with_cofactors {
                    quotients[k].push(Term { coeff: t.coeff, mono: m });
                }
            }
            None => rem.push(t),
        }
    }
    let rem = Polynomial::from_sorted(ring, rem);
    let q = with_cofactors.then(|| quotients.into_iter().map(|q| Polynomial::from_sorted(ring, q)).collect());
    Ok((rem, q))
}

/// Normal form without cofactors.
pub fn reduce<K: Field>(f: &Polynomial<K>, gb: &GroebnerBasis<K>) -> Result<Polynomial<K>> {
    Ok(normal_form(f, gb, false)?.0)
}

/// All S-polynomials of the basis reduce to zero (the Buchberger criterion).
pub fn satisfies_buchberger_criterion<K: Field>(gb: &GroebnerBasis<K>) -> Result<bool> {
    let b = gb.basis();
    let one = |p: &Polynomial<K>| p.lead_coeff().unwrap().one_like();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let li = b[i].lead_monomial().unwrap();
            let lj = b[j].lead_monomial().unwrap();
            let l = li.lcm(&lj);
            let c = one(&b[i]);
            let s = b[i].mul_term(&c, &l.div(&li)).add_scaled(&b[j], &c.neg(), &l.div(&lj));
            if !reduce(&s, gb)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks that every basis element is monic, that no lead term divides a term
/// of another element, and that the basis is sorted.
pub fn is_reduced<K: Field>(gb: &GroebnerBasis<K>) -> bool {
    let order = gb.order();
    let b = gb.basis();
    for (i, g) in b.iter().enumerate() {
        if !g.lead_coeff().is_some_and(|c| c.is_one()) {
            return false;
        }
        let li = g.lead_monomial().unwrap();
        for (j, h) in b.iter().enumerate() {
            if i != j && h.terms().iter().any(|t| li.divides(&t.mono)) {
                return false;
            }
        }
        if i > 0 && order.cmp(&b[i - 1].lead_monomial().unwrap(), &li) != std::cmp::Ordering::Less {
            return false;
        }
    }
    true
}
