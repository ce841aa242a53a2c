//! Krull dimension and Hilbert series, both read off the initial ideal.

use std::fmt;

use super::engine::Budget;
use super::ideal::Ideal;
use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Monomial};

/// Dimension and codimension of `R/I`; the unit ideal has dimension −1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dimension {
    pub dim: i32,
    pub codim: i32,
}

/// Keeps only minimal elements under divisibility, sorted for determinism.
pub fn minimalize(monos: &[Monomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = monos.to_vec();
    v.sort_by_key(|m| m.degree());
    v.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in v {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Largest set of variables containing the support of no generator.
pub fn monomial_dimension(nvars: usize, monos: &[Monomial]) -> i32 {
    if monos.iter().any(|m| m.is_one()) {
        return -1;
    }
    let supports: Vec<u32> = minimalize(monos).iter().map(|m| m.support_mask()).collect();
    let mut best = 0;
    for s in 0u32..(1u32 << nvars) {
        let size = s.count_ones() as i32;
        if size > best && supports.iter().all(|&sup| sup & !s != 0) {
            best = size;
        }
    }
    best
}

pub fn krull_dimension<K: Field>(ideal: &Ideal<K>, budget: &Budget) -> Result<Dimension> {
    let n = ideal.ring().nvars() as i32;
    if ideal.is_zero() {
        return Ok(Dimension { dim: n, codim: 0 });
    }
    let gb = ideal.groebner(budget)?;
    let dim = monomial_dimension(n as usize, &gb.lead_monomials());
    Ok(Dimension { dim, codim: n - dim })
}

/// Integer polynomial in `t`, dense, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TPoly(pub Vec<i128>);

impl TPoly {
    pub fn one() -> Self {
        TPoly(vec![1])
    }

    fn trim(mut self) -> Self {
        while self.0.len() > 1 && *self.0.last().unwrap() == 0 {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![0i128; n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        TPoly(v).trim()
    }

    pub fn shift(&self, k: usize) -> TPoly {
        let mut v = vec![0i128; k];
        v.extend_from_slice(&self.0);
        TPoly(v).trim()
    }

    /// Multiplication by `1 − t^a`.
    pub fn times_one_minus(&self, a: usize) -> TPoly {
        let neg = TPoly(self.0.iter().map(|c| -c).collect());
        self.add(&neg.shift(a))
    }

    pub fn eval_one(&self) -> i128 {
        self.0.iter().sum()
    }

    /// Exact division by `1 + t + … + t^(a−1)`, if possible.
    pub fn div_geometric(&self, a: usize) -> Option<TPoly> {
        if a == 1 {
            return Some(self.clone());
        }
        let n = self.0.len();
        let mut q = vec![0i128; n];
        // p = q·(1 + … + t^(a−1)); q_k = p_k − p_{k−1} + q_{k−a}
        for k in 0..n {
            let mut v = self.0[k];
            if k >= 1 {
                v -= self.0[k - 1];
            }
            if k >= a {
                v += q[k - a];
            }
            q[k] = v;
        }
        let q = TPoly(q).trim();
        let mut back = TPoly(vec![0]);
        for i in 0..a {
            back = back.add(&q.shift(i));
        }
        if back == self.clone().trim() {
            Some(q)
        } else {
            None
        }
    }

    /// Exact division by `1 − t`, if possible.
    pub fn div_one_minus_t(&self) -> Option<TPoly> {
        if self.eval_one() != 0 {
            return None;
        }
        // q_k = Σ_{i ≤ k} p_i
        let mut q = Vec::with_capacity(self.0.len());
        let mut run = 0i128;
        for &c in &self.0[..self.0.len().saturating_sub(1)] {
            run += c;
            q.push(run);
        }
        if q.is_empty() {
            q.push(0);
        }
        Some(TPoly(q).trim())
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `numerator / Π (1 − t^w)` over the listed weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: TPoly,
    pub denominator: Vec<u32>,
}

impl HilbertSeries {
    /// Brings the series to the form `h(t)/(1−t)^d` when possible: every factor
    /// `1 − t^w` whose cyclotomic part divides the numerator is replaced by
    /// `1 − t`, then common `1 − t` factors cancel.
    pub fn simplify(&self) -> HilbertSeries {
        let mut num = self.numerator.clone();
        let mut den = Vec::new();
        for &w in &self.denominator {
            match num.div_geometric(w as usize) {
                Some(q) => {
                    num = q;
                    den.push(1);
                }
                None => den.push(w),
            }
        }
        den.sort_unstable();
        loop {
            let pos = match den.iter().position(|&w| w == 1) {
                Some(p) => p,
                None => break,
            };
            match num.div_one_minus_t() {
                Some(q) if num != TPoly(vec![0]) => {
                    num = q;
                    den.remove(pos);
                }
                _ => break,
            }
        }
        HilbertSeries { numerator: num, denominator: den }
    }

    /// Order of the pole at `t = 1`, the Krull dimension of the quotient.
    pub fn dimension(&self) -> usize {
        let s = self.simplify();
        s.denominator.len()
    }

    /// Coefficient of `t^d` in the power series expansion.
    pub fn coefficient(&self, d: usize) -> i128 {
        let mut series = vec![0i128; d + 1];
        for (i, &c) in self.numerator.0.iter().enumerate() {
            if i <= d {
                series[i] = c;
            }
        }
        for &w in &self.denominator {
            let w = w as usize;
            // multiply by 1/(1 − t^w)
            for k in w..=d {
                series[k] += series[k - w];
            }
        }
        series[d]
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones = self.denominator.iter().filter(|&&w| w == 1).count();
        let mut parts = Vec::new();
        if ones > 0 {
            parts.push(if ones == 1 { "(1-t)".to_string() } else { format!("(1-t)^{ones}") });
        }
        for &w in self.denominator.iter().filter(|&&w| w != 1) {
            parts.push(format!("(1-t^{w})"));
        }
        if parts.is_empty() {
            write!(f, "{}", self.numerator)
        } else {
            let num = self.numerator.to_string();
            if self.numerator.0.iter().filter(|&&c| c != 0).count() > 1 {
                write!(f, "({num})/{}", parts.join("*"))
            } else {
                write!(f, "{num}/{}", parts.join("*"))
            }
        }
    }
}

fn pivot_numerator(nvars: usize, weights: &[u32], gens: Vec<Monomial>) -> TPoly {
    let gens = minimalize(&gens);
    if gens.is_empty() {
        return TPoly::one();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut p = TPoly::one();
        for g in &gens {
            p = p.times_one_minus(g.weighted_degree(weights) as usize);
        }
        return p;
    }
    // pivot on the variable occurring in most generators, at the median exponent
    let mut best_var = 0;
    let mut best_count = 0;
    for v in 0..nvars {
        let c = gens.iter().filter(|g| g.exponent(v) > 0).count();
        if c > best_count {
            best_count = c;
            best_var = v;
        }
    }
    let mut exps: Vec<u32> = gens.iter().map(|g| g.exponent(best_var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2].max(1);
    let mut pivot = Monomial::ONE;
    pivot.set_exponent(best_var, e);
    // N(M) = N(M + (p)) + t^{deg p} · N(M : p)
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let quotient: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&pivot))).collect();
    let a = pivot_numerator(nvars, weights, with_pivot);
    let b = pivot_numerator(nvars, weights, quotient);
    a.add(&b.shift(pivot.weighted_degree(weights) as usize))
}

/// Hilbert series of `k[vars]/(monos)` for the given variable weights.
pub fn monomial_hilbert_series(nvars: usize, weights: &[u32], monos: &[Monomial]) -> HilbertSeries {
    let numerator = pivot_numerator(nvars, weights, monos.to_vec());
    HilbertSeries { numerator, denominator: weights[..nvars].to_vec() }
}

/// Hilbert series of `R/I` for the grading given by `weights`, in simplified form.
pub fn hilbert_series<K: Field>(ideal: &Ideal<K>, weights: &[u32], budget: &Budget) -> Result<HilbertSeries> {
    let n = ideal.ring().nvars();
    if weights.len() != n || weights.contains(&0) {
        return Err(AlgebraError::Config("one positive weight per variable required".into()));
    }
    for g in ideal.generators() {
        if !g.is_homogeneous_wrt(weights) {
            return Err(AlgebraError::NotHomogeneous(g.to_string()));
        }
    }
    let leads = if ideal.is_zero() { Vec::new() } else { ideal.groebner(budget)?.lead_monomials() };
    Ok(monomial_hilbert_series(n, weights, &leads).simplify())
}

/// Brute-force count of monomials of weighted degree `d` outside `(monos)`.
pub fn standard_monomial_count(nvars: usize, weights: &[u32], monos: &[Monomial], d: u32) -> u64 {
    fn rec(
        v: usize,
        nvars: usize,
        weights: &[u32],
        left: u32,
        cur: &mut Monomial,
        monos: &[Monomial],
        count: &mut u64,
    ) {
        if v == nvars {
            if left == 0 && !monos.iter().any(|m| m.divides(cur)) {
                *count += 1;
            }
            return;
        }
        let w = weights[v];
        let mut e = 0;
        loop {
            if e * w > left {
                break;
            }
            cur.set_exponent(v, e);
            rec(v + 1, nvars, weights, left - e * w, cur, monos, count);
            e += 1;
        }
        cur.set_exponent(v, 0);
    }
    let mut count = 0;
    let mut cur = Monomial::ONE;
    rec(0, nvars, weights, d, &mut cur, monos, &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldSpec, Rational, RingSpec};

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn series_of_x_squared_in_two_variables() {
        let hs = monomial_hilbert_series(2, &[1, 1], &[m(&[2, 0])]).simplify();
        assert_eq!(hs.numerator, TPoly(vec![1, 1]));
        assert_eq!(hs.denominator, vec![1]);
        assert_eq!(hs.to_string(), "(1+t)/(1-t)");
    }

    #[test]
    fn polynomial_ring_series() {
        let hs = monomial_hilbert_series(3, &[1, 1, 1], &[]).simplify();
        assert_eq!(hs.to_string(), "1/(1-t)^3");
        assert_eq!(hs.coefficient(2), 6);
    }

    #[test]
    fn weighted_series_matches_count() {
        let w = [1, 1, 2];
        let gens = [m(&[1, 1, 0]), m(&[0, 0, 2]), m(&[2, 0, 1])];
        let hs = monomial_hilbert_series(3, &w, &gens);
        for d in 0..12 {
            assert_eq!(hs.coefficient(d) as u64, standard_monomial_count(3, &w, &gens, d as u32), "degree {d}");
        }
        let s = hs.simplify();
        for d in 0..12 {
            assert_eq!(s.coefficient(d), hs.coefficient(d));
        }
    }

    #[test]
    fn dimension_of_monomial_ideals() {
        assert_eq!(monomial_dimension(3, &[m(&[1, 1, 0])]), 2);
        assert_eq!(monomial_dimension(3, &[]), 3);
        assert_eq!(monomial_dimension(3, &[m(&[0, 0, 0])]), -1);
        let r = RingSpec::affine(3, FieldSpec::Rationals);
        let i: Ideal<Rational> = Ideal::from_strs(&r, &["x1*x2"]).unwrap();
        assert_eq!(krull_dimension(&i, &Budget::unlimited()).unwrap(), Dimension { dim: 2, codim: 1 });
        assert_eq!(krull_dimension(&Ideal::<Rational>::zero(&r), &Budget::unlimited()).unwrap().dim, 3);
    }
}
