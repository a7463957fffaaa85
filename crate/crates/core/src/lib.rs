//! Exact-arithmetic computer algebra for trilinear Leibniz structures.
//!
//! Everything is computed over the rationals with arbitrary precision — a
//! reported pass is a proof over the given basis, and every failure comes
//! with the offending basis tuple and the exact defect vector.
//!
//! The crate covers:
//!
//! * trilinear Leibniz algebras, their modules and semidirect products
//!   ([`leibniz`]);
//! * three-bracket systems with the associated compatibility identities,
//!   their constructions and the universal enveloping quotient
//!   ([`trileibniz`]);
//! * embedding tensors, averaging operators and the operators they induce
//!   ([`embedding`]);
//! * algebra actions, crossed modules and compatible bracket pairs
//!   ([`dialgebra`]);
//! * linear deformations of embedding tensors and the associated degree-one
//!   cohomology ([`deformation`]).
//!
//! Identity sweeps run in parallel via rayon when the `parallel` feature
//! (default on) is enabled; [`set_parallel`] switches the same build between
//! the parallel and sequential paths at runtime. Reports are deterministic
//! either way.

pub mod deformation;
pub mod dialgebra;
pub mod embedding;
pub mod error;
pub mod leibniz;
pub mod matrix;
pub mod report;
pub mod samples;
pub mod scalar;
pub mod subspace;
mod sweep;
pub mod tensor;
pub mod trileibniz;

pub use error::CoreError;
pub use report::{CheckReport, Violation};
pub use scalar::Scalar;
pub use sweep::{parallel_enabled, set_parallel};
