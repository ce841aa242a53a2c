//! Gröbner bases and the ideal operations built on them.

mod bucket;
pub mod calculus;
pub mod dimension;
pub mod engine;
pub mod graded;
pub mod ideal;
pub mod lift;
#[cfg(test)]
mod tests;

pub use calculus::{
    eliminate, generators_in, ideal_quotient, ideals_equal, intersect, is_subideal, iterated_quotient,
    quotient_by_element, quotient_by_element_via, quotient_in_degree, restrict_to_subring, saturate,
    saturate_by_element, saturate_by_element_via, saturate_by_maximal_ideal, saturate_via, saturation_exponent,
    QuotientRoute, SaturationRoute,
};
pub use dimension::{hilbert_series, krull_dimension, Dimension, HilbertSeries, TPoly};
pub use engine::{
    groebner_basis, groebner_basis_with, is_reduced, normal_form, reduce, satisfies_buchberger_criterion, Budget,
    GbOptions, GbStats, GroebnerBasis,
};
pub use graded::{graded_dimension, minimal_generator_degrees, relative_generator_degrees, Echelon, GeneratorDegrees};
pub use ideal::{exponent_vectors, ideal_combine, ideal_membership, CombineOp, Ideal};
pub use lift::{evaluate_lift, lift_into_power, LiftTerm};
