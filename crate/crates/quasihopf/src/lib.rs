//! Exact-arithmetic toolkit for finite-dimensional quasi-Hopf algebras.
//!
//! An algebra is presented by structure constants over an exact field
//! (the rationals or a prime field), together with a coproduct, counit,
//! associator, antipode and the distinguished elements `alpha`, `beta`.
//! On top of such a presentation the crate
//!
//! - verifies every defining axiom (associativity, quasi-coassociativity,
//!   the normalized 3-cocycle laws, the antipode axioms) and the q/p
//!   element identities, reporting failures with explicit witnesses;
//! - computes left and right integrals, the projection onto the integral
//!   space, and the integral/dual isomorphism `theta`;
//! - derives Frobenius coordinate systems with their Nakayama
//!   automorphisms, modular augmentations and derivatives;
//! - certifies separability and strong separability, the Radford-type
//!   fourth-power formulas for the antipode, and the cointegral
//!   projection;
//! - checks that a stable subalgebra is a beta-Frobenius extension and
//!   produces the extension's Frobenius homomorphism and dual bases.
//!
//! All arithmetic is exact; there is no floating point and no tolerance
//! anywhere. The crate is `no_std` (it requires `alloc`); IO, file
//! formats and the command line live in the companion `quasihopf-cli`
//! crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod builders;
mod error;
pub mod extensions;
pub mod field;
pub mod frobenius;
pub mod integrals;
pub mod linear;
pub mod matrix;
pub mod presentation;
pub mod qp;
pub mod radford;
pub mod report;
pub mod separability;
pub mod tensor;

pub use algebra::AlgebraPresentation;
pub use error::Error;
pub use field::{FieldSpec, Scalar};
// re-export added with module below
pub use frobenius::{DerivativeResult, FrobeniusSystem};
pub use integrals::{IntegralData, IntegralSpace, Side};
pub use linear::{AlgebraElement, Functional, LinMap};
pub use matrix::Matrix;
pub use presentation::{QuasiBialgebra, QuasiHopf};
pub use qp::QPElements;
pub use report::{Check, Report, Witness};
pub use tensor::{MultTable, Tensor};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
