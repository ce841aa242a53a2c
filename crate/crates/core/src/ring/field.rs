//! Exact coefficient fields: the rationals and prime fields of word size.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Default prime for the finite-field proxy mode.
pub const DEFAULT_PRIME: u32 = 32003;

/// Which coefficient field a ring is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Validates a prime-field modulus: prime, odd and below 2^31.
    pub fn prime(p: u32) -> Result<Self, AlgebraError> {
        if !(3..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::InvalidField(format!("{p} is not an odd prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// True when the field stands in for characteristic zero.
    pub fn is_proxy(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Parses `q` or `fp:<p>`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t.strip_prefix("fp:") {
            let p: u32 = rest.parse().map_err(|_| AlgebraError::InvalidField(format!("bad modulus in '{t}'")))?;
            return FieldSpec::prime(p);
        }
        Err(AlgebraError::InvalidField(format!("unknown field '{t}' (expected q or fp:<p>)")))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficient arithmetic shared by every polynomial in the crate.
///
/// Elements carry whatever context they need (the modulus for prime fields),
/// so no separate field object is threaded through the algorithms.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    /// Whether elements of this type can live in the given field.
    fn accepts(spec: &FieldSpec) -> bool;
    fn from_i64(spec: &FieldSpec, v: i64) -> Self;
    /// `num/den` in the field; `None` when `den` vanishes there.
    fn from_fraction(spec: &FieldSpec, num: &BigInt, den: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
    /// Sign and absolute value for printing; prime-field elements use the
    /// symmetric residue range.
    fn sign_and_abs(&self) -> (bool, String);
    /// Integer numerator/denominator of a canonical lift (symmetric for fields of
    /// prime order).
    fn to_fraction(&self) -> (BigInt, BigInt);

    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Element of the field of rational numbers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl Field for Rational {
    fn accepts(spec: &FieldSpec) -> bool {
        matches!(spec, FieldSpec::Rationals)
    }

    fn from_i64(_spec: &FieldSpec, v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn from_fraction(_spec: &FieldSpec, num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num.clone(), den.clone())))
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Self {
        assert!(!self.0.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }

    fn sign_and_abs(&self) -> (bool, String) {
        let neg = self.0.is_negative();
        let a = self.0.abs();
        let s = if a.denom().is_one() { a.numer().to_string() } else { format!("{}/{}", a.numer(), a.denom()) };
        (neg, s)
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.0.numer().clone(), self.0.denom().clone())
    }

    fn zero_like(&self) -> Self {
        Rational(BigRational::zero())
    }

    fn one_like(&self) -> Self {
        Rational(BigRational::one())
    }

    fn pow(&self, e: u64) -> Self {
        Rational(num_traits::pow(self.0.clone(), e as usize))
    }
}

/// Element of the prime field of order `p`, stored in one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: i64, modulus: u32) -> Self {
        Fp { value: value.rem_euclid(modulus as i64) as u32, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn symmetric(&self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }
}

impl Field for Fp {
    fn accepts(spec: &FieldSpec) -> bool {
        matches!(spec, FieldSpec::Prime(_))
    }

    fn from_i64(spec: &FieldSpec, v: i64) -> Self {
        match spec {
            FieldSpec::Prime(p) => Fp::new(v, *p),
            FieldSpec::Rationals => panic!("Fp element requested for the rationals"),
        }
    }

    fn from_fraction(spec: &FieldSpec, num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = match spec {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => panic!("Fp element requested for the rationals"),
        };
        let pb = BigInt::from(p);
        let n = num.mod_floor(&pb).to_u32().expect("residue fits");
        let d = den.mod_floor(&pb).to_u32().expect("residue fits");
        if d == 0 {
            return None;
        }
        let nf = Fp { value: n, modulus: p };
        let df = Fp { value: d, modulus: p };
        Some(nf.mul(&df.inv()))
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.value == 1
    }

    #[inline]
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value + other.value;
        let s = if s >= self.modulus { s - self.modulus } else { s };
        Fp { value: s, modulus: self.modulus }
    }

    #[inline]
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s =
            if self.value >= other.value { self.value - other.value } else { self.value + self.modulus - other.value };
        Fp { value: s, modulus: self.modulus }
    }

    #[inline]
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = (self.value as u64 * other.value as u64) % self.modulus as u64;
        Fp { value: v as u32, modulus: self.modulus }
    }

    #[inline]
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }

    fn inv(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        // extended Euclid on (value, p)
        let (mut a, mut b) = (self.value as i64, self.modulus as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let q = a / b;
            (a, b) = (b, a - q * b);
            (x0, x1) = (x1, x0 - q * x1);
        }
        Fp::new(x0, self.modulus)
    }

    fn sign_and_abs(&self) -> (bool, String) {
        let s = self.symmetric();
        (s < 0, s.unsigned_abs().to_string())
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.symmetric()), BigInt::one())
    }

    fn zero_like(&self) -> Self {
        Fp { value: 0, modulus: self.modulus }
    }

    fn one_like(&self) -> Self {
        Fp { value: 1, modulus: self.modulus }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_round_trip() {
        let spec = FieldSpec::Prime(DEFAULT_PRIME);
        for v in [1i64, 2, 3, 17, 32002, -5] {
            let a = Fp::from_i64(&spec, v);
            assert!(a.mul(&a.inv()).is_one());
        }
    }

    #[test]
    fn fp_fraction_matches_inverse() {
        let spec = FieldSpec::Prime(7);
        let half = Fp::from_fraction(&spec, &BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half.value(), 4);
        assert!(Fp::from_fraction(&spec, &BigInt::from(1), &BigInt::from(14)).is_none());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("fp:32003").unwrap(), FieldSpec::Prime(32003));
        assert!(FieldSpec::parse("fp:32004").is_err());
        assert!(FieldSpec::parse("fp:2").is_err());
        assert!(FieldSpec::parse("r").is_err());
        assert_eq!(FieldSpec::Prime(101).to_string(), "fp:101");
    }

    #[test]
    fn rational_printing() {
        let (neg, s) = Rational::new(-3, 2).sign_and_abs();
        assert!(neg);
        assert_eq!(s, "3/2");
        let (neg, s) = Fp::new(-5, 101).sign_and_abs();
        assert!(neg);
        assert_eq!(s, "5");
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = Fp::new(3, 101);
        assert_eq!(a.pow(4), a.mul(&a).mul(&a).mul(&a));
        assert_eq!(Rational::new(2, 3).pow(3), Rational::new(8, 27));
    }
}
