//! Divided differences and Hermite interpolation on sequences with repeated
//! (confluent) nodes.
//!
//! The divided-difference table in [`ddtable`] is the reference route. Every
//! other module computes the same quantities another way: Horner and basis
//! change on Newton forms ([`newton`]), polynomials of a bidiagonal matrix
//! ([`opitz`]), explicit weights and closed forms ([`identities`]), and
//! integral representations ([`analysis`]). Each route can be checked
//! against the others.
//!
//! Nodes are real and stored as `f64`. Repeated nodes must be adjacent;
//! [`cluster_nodes`] sorts raw input and, with a positive tolerance, merges
//! nearly equal nodes.

pub mod analysis;
pub mod ddtable;
pub mod error;
pub mod function;
pub mod identities;
pub mod newton;
pub mod nodes;
pub mod opitz;
pub mod poly;

pub use analysis::{
    bspline_eval, bspline_integral, contour_dd, determinant_dd, floater_expansion, frobenius_partition, genocchi_dd,
    hopf_anchor, interlacing_sites, mean_value_check, peano_dd, ContourEstimate, FloaterExpansion, Interlacing,
    MeanValueBracket, QuadratureConfig,
};
pub use ddtable::{divided_difference, divided_difference_of, hermite_interpolant, newton_coeffs, DDTable};
pub use error::{Error, Result};
pub use function::{AnalyticFunction, SmoothFunction};
pub use identities::{
    apply_functional, cauchy_kernel_dd, chakalov_weights, chebyshev_extreme_sites, functional_norm, lagrange_weights,
    reciprocal_dd, refine_coeffs, DDFunctional, FunctionalTerm,
};
pub use newton::{
    change_basis, derivative_at, extended_dd_derivative, horner_eval, insert_center, leading_part, remainder_poly,
    to_taylor, Horner,
};
pub use nodes::{cluster_nodes, newton_weight, sample_function, Cluster, HermiteDataset, NodeSequence};
pub use opitz::{leibniz_dd, matrix_polynomial, monomial_dd, opitz_matrix, OpitzMatrix};
pub use poly::{NewtonPoly, PowerPoly};
