//! Exact constructions for Loewy-length-two modules of constant Jordan type.
//!
//! Representations of the `r`-Kronecker quiver (two vertices, `r` parallel
//! arrows) are stored as `r` exact matrices of shape `b x a`. This crate
//! decides which Jordan types `[1]^c [2]^d` are carried by indecomposable
//! representations with the equal kernels property, builds explicit matrix
//! witnesses for them and certifies those witnesses without floating point.
//!
//! The crate is `no_std` and only needs `alloc`; file formats and the command
//! line front end live in the `kronjord` crate.
//!
//! Module map:
//!
//! - [`exactmat`]: exact scalars (rationals, prime fields) and dense matrices.
//! - [`kronecker`]: the representation type, quadratic forms, Coxeter matrix,
//!   pencils and Jordan types.
//! - [`cover`]: the universal covering tree, source-regular subtrees and the
//!   push-down functor.
//! - [`bgp`]: reflection functors, the inverse translate and the Coxeter
//!   shift planner.
//! - [`echelon`]: shifted-identity constructions with a structural kernel
//!   certificate.
//! - [`verify`]: Hom/Ext, endomorphism algebras and sampling checks.
//! - [`pipeline`]: classification and realization of Jordan types.

#![no_std]

extern crate alloc;

pub mod bgp;
pub mod cover;
pub mod echelon;
mod error;
pub mod exactmat;
pub mod kronecker;
pub mod pipeline;
pub mod verify;

pub use error::{Error, Result};
pub use exactmat::{Field, Matrix, Scalar};
pub use kronecker::{DimVector, JordanType, KroneckerRep};
