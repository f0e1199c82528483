//! Exact-arithmetic analysis of the kernel of a polynomial morphism of
//! trivialized vector bundles over an affine variety.
//!
//! Given an `m x n` matrix of polynomials (the morphism `d: E -> F`
//! fiberwise) and an ambient ideal cutting out the base variety, the crate
//! computes:
//!
//! - the rank stratification of the base by minor ideals, with the minimal
//!   kernel dimension, a generic-rank verdict, and the `2k - 1`
//!   quasifibration bound for the projectivized kernel ([`strata`]);
//! - limits of kernel planes along rational curves into degenerate points,
//!   in Plücker coordinates and as explicit bases ([`nash`]);
//! - Betti-number consistency checks for symmetric products of a Riemann
//!   surface against the torus-times-projective-space model ([`jacobi`]).
//!
//! Everything outside [`jacobi`]'s integer computations runs over
//! arbitrary-precision rationals; no floating point is used anywhere in
//! this crate.

pub mod error;
pub mod groebner;
pub mod jacobi;
pub mod linalg;
pub mod nash;
pub mod poly;
pub mod strata;

pub use error::{Error, Result};
pub use groebner::{buchberger, GroebnerBasis, Ideal, DEFAULT_STEP_BUDGET};
pub use linalg::{PolyMatrix, RationalMatrix, UnivariateMatrix};
pub use nash::{kernel_plucker, limit_kernel_along_curve, limit_plane_in_kernel_check};
pub use nash::{LimitPlane, PluckerVector, RationalCurve};
pub use poly::{
    format_rational, parse_polynomial, parse_rational, Monomial, MonomialOrder, Polynomial,
    UniPoly, VariableContext,
};
pub use strata::{
    minimal_kernel_dim, stratify, GenericRank, MorphismInstance, SampleReport, Stratification,
    StratifyOptions, Stratum,
};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;
