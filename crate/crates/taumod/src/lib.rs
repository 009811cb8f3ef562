//! Exact computer algebra for Frobenius-semilinear modules (τ-modules)
//! over twisted tensor algebras Λ⊗R of finite-dimensional 𝔽_q-algebras.
//!
//! The library builds, in exact arithmetic:
//!
//! * finite fields 𝔽_q and polynomial factorization ([`field`], [`poly`]);
//! * finite-dimensional commutative 𝔽_q-algebras by structure constants,
//!   ideals, idempotent decomposition and coefficient-field splittings
//!   ([`algebra`]);
//! * τ-modules over S = Λ⊗R with the partial Frobenius F — twists,
//!   unit/nilpotent predicates, homs, kernels, cokernels, tensor
//!   products, duals, presentations, Fitting ideals and base change
//!   ([`module`]);
//! * executable verifiers for the structure theorems of this category:
//!   flatness, projectivity, artinian descent, invariant ideals,
//!   End(1), solution spaces with Galois action, pullback faithfulness
//!   ([`verify`]);
//! * constructors for the standard examples and seeded random corpora
//!   ([`zoo`]), and a batch front end ([`cli`]).
//!
//! Every`examples/` file is a runnable walkthrough of one capability;
//! `cargo run --bin taumod -- verify-theorems --corpus default --seed 7`
//! machine-checks the whole theorem suite at desk scale.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod field;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod rng;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
