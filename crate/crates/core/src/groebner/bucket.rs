//! Geobuckets: a sum of sorted term lists of geometrically growing sizes, so
//! that repeated `p -= c·m·g` updates cost amortized O(len·log len).

use std::cmp::Ordering;

use crate::ring::{Field, MonomialOrder, Term};

/// Terms inside each bucket are kept in ascending order so that the largest
/// term sits at the end of the vector.
pub(crate) struct GeoBucket<'o, K> {
    order: &'o MonomialOrder,
    buckets: Vec<Vec<Term<K>>>,
}

fn capacity(level: usize) -> usize {
    4usize << (2 * level)
}

fn merge_ascending<K: Field>(order: &MonomialOrder, a: Vec<Term<K>>, b: Vec<Term<K>>) -> Vec<Term<K>> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = a.into_iter().peekable();
    let mut ib = b.into_iter().peekable();
    loop {
        let ord = match (ia.peek(), ib.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(x), Some(y)) => order.cmp(&x.mono, &y.mono),
        };
        match ord {
            Ordering::Less => out.push(ia.next().unwrap()),
            Ordering::Greater => out.push(ib.next().unwrap()),
            Ordering::Equal => {
                let x = ia.next().unwrap();
                let y = ib.next().unwrap();
                let c = x.coeff.add(&y.coeff);
                if !c.is_zero() {
                    out.push(Term { coeff: c, mono: x.mono });
                }
            }
        }
    }
    out
}

impl<'o, K: Field> GeoBucket<'o, K> {
    pub fn new(order: &'o MonomialOrder) -> Self {
        GeoBucket { order, buckets: Vec::new() }
    }

    /// Adds an ascending term list.
    pub fn add_ascending(&mut self, mut terms: Vec<Term<K>>) {
        let mut level = 0;
        while capacity(level) < terms.len() {
            level += 1;
        }
        loop {
            if self.buckets.len() <= level {
                self.buckets.resize_with(level + 1, Vec::new);
            }
            let existing = std::mem::take(&mut self.buckets[level]);
            terms = merge_ascending(self.order, existing, terms);
            if terms.len() <= capacity(level) {
                self.buckets[level] = terms;
                return;
            }
            level += 1;
        }
    }

    /// Adds `c·m·t` for every term `t` of a descending list, skipping the first
    /// `skip` terms.
    pub fn add_scaled_descending(&mut self, terms: &[Term<K>], skip: usize, c: &K, m: &crate::ring::Monomial) {
        let v: Vec<Term<K>> =
            terms[skip..].iter().rev().map(|t| Term { coeff: t.coeff.mul(c), mono: t.mono.mul(m) }).collect();
        self.add_ascending(v);
    }

    /// Removes and returns the largest term of the sum, or `None` for zero.
    pub fn pop_lead(&mut self) -> Option<Term<K>> {
        loop {
            let mut best: Option<usize> = None;
            for (i, b) in self.buckets.iter().enumerate() {
                if let Some(t) = b.last() {
                    best = match best {
                        None => Some(i),
                        Some(j) => {
                            let cur = self.buckets[j].last().unwrap();
                            if self.order.cmp(&t.mono, &cur.mono) == Ordering::Greater {
                                Some(i)
                            } else {
                                Some(j)
                            }
                        }
                    };
                }
            }
            let j = best?;
            let mut lead = self.buckets[j].pop().unwrap();
            for i in 0..self.buckets.len() {
                if i == j {
                    continue;
                }
                if let Some(t) = self.buckets[i].last() {
                    if t.mono == lead.mono {
                        let t = self.buckets[i].pop().unwrap();
                        lead.coeff = lead.coeff.add(&t.coeff);
                    }
                }
            }
            if !lead.coeff.is_zero() {
                return Some(lead);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Fp, Monomial};

    #[test]
    fn bucket_sum_matches_direct_sum() {
        let order = MonomialOrder::degrevlex(2);
        let mut b = GeoBucket::new(&order);
        let t = |c: i64, e: &[u32]| Term { coeff: Fp::new(c, 101), mono: Monomial::from_exponents(e) };
        b.add_ascending(vec![t(1, &[0, 1]), t(1, &[1, 0])]);
        b.add_ascending(vec![t(-1, &[1, 0]), t(2, &[2, 0])]);
        for _ in 0..20 {
            b.add_ascending(vec![t(1, &[0, 0])]);
        }
        assert_eq!(b.pop_lead(), Some(t(2, &[2, 0])));
        assert_eq!(b.pop_lead(), Some(t(1, &[0, 1])));
        assert_eq!(b.pop_lead(), Some(t(20, &[0, 0])));
        assert_eq!(b.pop_lead(), None);
    }
}
