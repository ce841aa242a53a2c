//! Exponent vectors and the monomial orders used by the engine.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};

use serde::{Deserialize, Serialize};

/// Hard cap on the number of ring variables a monomial can carry.
pub const MAX_VARS: usize = 16;

/// A power product, stored inline with its total (standard) degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], degree: 0 };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    pub fn variable(index: usize) -> Self {
        let mut m = Monomial::ONE;
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        out.degree = self.degree + other.degree;
        out
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let mut out = *self;
        for x in out.exps.iter_mut() {
            *x = u16::try_from(*x as u32 * e).expect("exponent overflow");
        }
        out.degree = self.degree * e;
        out
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i] - other.exps[i];
        }
        out.degree = self.degree - other.degree;
        out
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.div(other))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            out.degree += out.exps[i] as u32;
        }
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::ONE;
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            out.degree += out.exps[i] as u32;
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Bit `i` set iff variable `i` occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        weights.iter().enumerate().map(|(i, w)| self.exps[i] as u32 * w).sum()
    }

    /// Degree in the variables whose bits are set in `mask`.
    pub fn degree_in(&self, mask: u32) -> u32 {
        let mut d = 0;
        for i in 0..MAX_VARS {
            if mask & (1 << i) != 0 {
                d += self.exps[i] as u32;
            }
        }
        d
    }

    /// Moves exponents to new positions: variable `i` goes to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut out = Monomial::ONE;
        for (i, &j) in map.iter().enumerate() {
            out.exps[j] += self.exps[i];
        }
        out.degree = self.degree;
        out
    }

    pub(crate) fn set_exponent(&mut self, var: usize, e: u32) {
        let old = self.exps[var] as u32;
        self.exps[var] = u16::try_from(e).expect("exponent overflow");
        self.degree = self.degree - old + e;
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

/// FNV-style hasher for monomial-keyed maps; the default SipHash dominates
/// profiles of polynomial multiplication otherwise.
#[derive(Default)]
pub struct MonoHasher(u64);

impl Hasher for MonoHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        let mut h = if self.0 == 0 { 0xcbf2_9ce4_8422_2325 } else { self.0 };
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100_0000_01b3);
        }
        self.0 = h;
    }
}

pub type MonoMap<V> = std::collections::HashMap<Monomial, V, BuildHasherDefault<MonoHasher>>;

/// The family a monomial order belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    /// Graded reverse lexicographic on the standard total degree.
    Degrevlex,
    /// Pure lexicographic.
    Lex,
    /// Compare the degree in the eliminated variables first (bitmask), then degrevlex.
    Elimination { eliminated: u32 },
}

/// A monomial order with an explicit variable priority: `priority[0]` is the
/// largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Degrevlex, priority: (0..nvars).collect() }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: (0..nvars).collect() }
    }

    pub fn elimination(nvars: usize, eliminated: &[usize]) -> Self {
        let mask = eliminated.iter().fold(0u32, |m, &i| m | (1 << i));
        MonomialOrder { kind: OrderKind::Elimination { eliminated: mask }, priority: (0..nvars).collect() }
    }

    /// Same kind, custom priority. Panics unless `priority` is a permutation.
    pub fn with_priority(mut self, priority: Vec<usize>) -> Self {
        let mut seen = priority.clone();
        seen.sort_unstable();
        assert!(seen.iter().enumerate().all(|(i, &v)| i == v), "priority must be a permutation");
        assert_eq!(priority.len(), self.priority.len(), "priority length mismatch");
        self.priority = priority;
        self
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    fn is_identity_priority(&self) -> bool {
        self.priority.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Index of the smallest variable.
    pub fn last_variable(&self) -> usize {
        *self.priority.last().expect("order over zero variables")
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Degrevlex => self.cmp_degrevlex(a, b),
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Elimination { eliminated } => match a.degree_in(*eliminated).cmp(&b.degree_in(*eliminated)) {
                Ordering::Equal => self.cmp_degrevlex(a, b),
                o => o,
            },
        }
    }

    #[inline]
    fn cmp_degrevlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree.cmp(&b.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        if self.is_identity_priority() {
            for v in (0..self.priority.len()).rev() {
                match a.exps[v].cmp(&b.exps[v]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
        } else {
            for &v in self.priority.iter().rev() {
                match a.exps[v].cmp(&b.exps[v]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
        }
        Ordering::Equal
    }

    /// Whether every variable of `mask` is larger than any monomial free of them,
    /// i.e. whether a basis in this order eliminates those variables.
    pub fn eliminates(&self, mask: u32) -> bool {
        match &self.kind {
            OrderKind::Elimination { eliminated } => mask & !eliminated == 0,
            OrderKind::Lex => {
                let k = mask.count_ones() as usize;
                self.priority[..k].iter().all(|&v| mask & (1 << v) != 0)
            }
            OrderKind::Degrevlex => mask == 0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_ties_broken_by_last_variable() {
        let o = MonomialOrder::degrevlex(3);
        // x1*x3 < x2^2 in degrevlex x1 > x2 > x3
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_priority() {
        let o = MonomialOrder::lex(2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let o = MonomialOrder::lex(2).with_priority(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Less);
    }

    #[test]
    fn elimination_order_puts_block_first() {
        let o = MonomialOrder::elimination(3, &[0]);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert!(o.eliminates(1));
        assert!(!o.eliminates(2));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 0]));
        assert_eq!(a.gcd(&b), m(&[1, 1, 0]));
        assert!(m(&[1, 1, 0]).divides(&a));
        assert!(!b.divides(&a));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
        assert_eq!(a.div(&m(&[1, 1, 0])), m(&[1, 0, 0]));
    }
}
