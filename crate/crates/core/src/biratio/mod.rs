//! Birational maps defined by the maximal minors of a linear matrix.

pub mod inversion;
pub mod kernel;
pub mod maps;

pub use inversion::{build_inversion_data, dmap_resolution_check, psi_matrix, InversionData};
pub use kernel::{
    kernel_generators, kernel_presentation, kernel_presentation_from, localized_codimension, pi_images, q_polynomials,
    w_nzd_check, GeneratorBlock, KernelPresentation,
};
pub use maps::{
    cremona_jacobian_identity, image_ideal, inverse_representatives, pairwise_gcd_free, representatives_of,
    source_inversion_factor, target_ring, InverseRepresentative, RationalMapData,
};
