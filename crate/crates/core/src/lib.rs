//! Exact symbolic calculus for Hom-Lie conformal algebras.
//!
//! Everything is computed over the rationals with polynomial scalars in `d`
//! (the translation operator `∂`) and spectral variables `l`, `l1`..`l9`.
//! Axiom checks reduce to asking whether a polynomial vanishes identically,
//! so every answer is exact.
//!
//! ```
//! use homlie::fixtures;
//! use homlie::structures::check_hom_lie;
//!
//! let vir = fixtures::virasoro();
//! assert!(check_hom_lie(&vir).passed());
//! ```

pub mod complex;
pub mod conformal;
pub mod deformation;
pub mod error;
pub mod fixtures;
pub mod linsolve;
pub mod matrix;
pub mod operator;
pub mod parse;
pub mod poly;
pub mod report;
pub mod structures;

pub use error::{Error, Result};
pub use matrix::{ModuleMap, PolyMatrix, StructureMap};
pub use parse::parse_poly;
pub use poly::{poly_equal_zero, poly_substitute, Monomial, MultiPoly, PolyVector, Rational, Var};
pub use report::{Check, Report, Status, Witness};
pub use structures::{HomLieConformalAlgebra, Representation, Space};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/structures.md")]
    mod structures {}
    #[doc = include_str!("../../../book/src/cochains.md")]
    mod cochains {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/deformations.md")]
    mod deformations {}
}
