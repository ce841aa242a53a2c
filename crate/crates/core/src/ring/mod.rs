//! Coefficients, monomials, polynomials and their text format.

mod field;
mod monomial;
mod parse;
mod poly;
mod spec;

pub use field::{Field, FieldSpec, Fp, Rational, DEFAULT_PRIME};
pub use monomial::{MonoMap, Monomial, MonomialOrder, OrderKind, MAX_VARS};
pub use parse::{format_poly, parse_poly};
pub use poly::{poly_arith, ArithOp, Polynomial, Term};
pub use spec::{RingBuilder, RingRef, RingSpec, VarBlock};
