//! Exact computations with weighted-graded submodules and quotients of free
//! modules over the polynomial ring.
//!
//! All arithmetic is over arbitrary-precision rationals, so every rank,
//! orthogonality and homology statement produced by this crate is exact. The
//! main entry points are
//!
//! * [`wander::minimize_generators`] — turn a finite set of homogeneous
//!   generators into a minimal one, either as an orthogonal basis of the
//!   per-degree complements `M_k ⊖ Σ_i z_i M_{k-γ_i}` or as a subset of the
//!   input,
//! * [`wander::betti_counts`] — the rank oracle counting minimal generators
//!   per degree,
//! * [`resolve::minimal_resolution`] — iterated syzygy extraction producing a
//!   minimal graded free resolution with polynomial matrices,
//! * [`koszul::koszul_homology_dim`] — degree-sliced Koszul homology of the
//!   coordinate multiplication tuple, used to cross-validate resolutions.
//!
//! The companion `betti-cli` crate adds an expression parser, a problem-file
//! format and a command-line driver; the `book/` directory of the repository
//! walks through the theory chapter by chapter with runnable snippets.

pub mod inner;
pub mod koszul;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod resolve;
pub mod wander;

pub use inner::{gram_schmidt, inner_product, InnerKernel};
pub use koszul::{euler_index, koszul_betti_check, koszul_homology_dim, EulerIndex, KoszulSlice};
pub use linalg::RatMatrix;
pub use module::{DegreeSliceBasis, FreeModuleSpec, ModuleVector, PresentedModule};
pub use poly::{monomial_basis, rat, Degree, Exponent, Grading, Homogeneity, Polynomial, Scalar};
pub use resolve::{
    check_exactness, check_minimality, fiber_homology, fredholm_index, minimal_resolution,
    presentation, syzygies, Certification, PolyMatrix, ResolveOptions, Resolution, ResolutionStep,
};
pub use wander::{
    betti_counts, cyclicity, minimize_generators, verify_minimal_orthogonality, wandering_slice,
    BettiRow, MinimalGenerators, MinimizeMode, OrthogonalityReport,
};

use std::fmt;

/// Errors reported by constructors and fallible operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A grading weight was zero.
    ZeroWeight { index: usize },
    /// A grading was constructed without variables.
    NoVariables,
    /// A generator or relation is not homogeneous.
    NotHomogeneous { role: &'static str, index: usize },
    /// Vectors from different free modules were mixed in one operation.
    SpecMismatch,
    /// A point had the wrong number of coordinates.
    PointDimension { expected: usize, found: usize },
    /// The operation requires a resolution certified complete.
    NotCertified,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroWeight { index } => {
                write!(f, "grading weight at position {index} must be positive")
            }
            Error::NoVariables => write!(f, "a grading needs at least one variable"),
            Error::NotHomogeneous { role, index } => {
                write!(f, "{role} {index} is not homogeneous")
            }
            Error::SpecMismatch => write!(f, "vectors belong to different free modules"),
            Error::PointDimension { expected, found } => {
                write!(f, "point has {found} coordinates, expected {expected}")
            }
            Error::NotCertified => {
                write!(f, "resolution is not certified complete; refusing to continue")
            }
        }
    }
}

impl std::error::Error for Error {}
