//! Exact commutative algebra for codimension-two determinantal ideals: Gröbner
//! bases, saturations, symbolic powers, birational inversion data and the
//! presentation of the symbolic Rees algebra.

pub mod biratio;
pub mod error;
pub mod groebner;
pub mod linmat;
pub mod report;
pub mod ring;
pub mod scenario;
pub mod sympow;

pub use error::{AlgebraError, Result};
