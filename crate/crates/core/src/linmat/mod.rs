//! Matrices of linear forms and the determinantal constructions built on them.

pub mod duals;
pub mod linear;
pub mod matrix;

pub use duals::{
    dual_identity, dual_linear_matrix, eta_matrix, eta_matrix_rank, jacobian_dual, jacobian_dual_identity,
    jacobian_matrix,
};
pub use linear::{
    expected_fitting_codim, fitting_certificate, fixture, minors_ideal, random_general_matrix, random_matrix,
    signed_maximal_minors, signed_maximal_minors_of, tchernev_matrix, FittingCheck, GenericityCertificate,
    LinearFormMatrix, MatrixSpec, Provenance, FIXTURES, MAX_RETRIES,
};
pub use matrix::{adjugate_det, minors, subsets, vector_rank, MinorTable, PolyMatrix};
