//! Exact-arithmetic library for multiparameter Schur functions and
//! Frobenius-Schur functions.
//!
//! Everything is computed over exact rationals. The main objects:
//!
//! * [`Partition`] — Young diagrams, Frobenius coordinates, skew shapes and
//!   the brute-force dimension oracles ([`partition`]);
//! * [`ParameterSequence`] — the doubly infinite parameter string a=(a_i)
//!   with dual, shift and factorial powers ([`paramseq`]);
//! * [`LambdaElement`] — the algebra of symmetric functions in the h-basis,
//!   with Schur expansion, duality and the shift automorphism ([`lambda`]);
//! * multiparameter Schur functions by three determinantal routes, skew
//!   variants and transition matrices ([`multischur`]);
//! * the super realization: exact polynomials in (x;y), evaluation points,
//!   the Sergeev-Pragacz formula and interpolation ([`superpoly`]);
//! * tableau/lattice-path combinatorics ([`tableaux`]);
//! * the shifted-Schur evaluation oracle ([`shifted`]);
//! * batch identity verification suites ([`verify`]).
//!
//! With the default `parallel` feature the verification sweeps shard cases
//! across threads via rayon; build with `--no-default-features` for the
//! sequential fallback.

pub mod error;
pub mod exec;
pub mod lambda;
pub mod multischur;
pub mod paramseq;
pub mod partition;
pub mod rat;
pub mod series;
pub mod shifted;
pub mod superpoly;
pub mod tableaux;
pub mod verify;

pub use error::Error;
pub use lambda::{LambdaElement, SchurExpansion};
pub use paramseq::ParameterSequence;
pub use partition::{FrobeniusCoords, Partition, SkewShape};
pub use rat::Rat;
pub use superpoly::{EvalPoint, SuperPolynomial};
