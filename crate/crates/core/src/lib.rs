//! A numerical laboratory for symmetric (unitarily invariant) matrix norms
//! and skew-Hermitian super-operators at finite dimension.
//!
//! The crate evaluates symmetric gauge norms and their Köthe duals
//! ([`gauge`]), carries them to matrices via singular values ([`spectral`]),
//! builds support functionals and semi-inner products on the real space of
//! Hermitian matrices and tests super-operators for the skew-Hermitian
//! property ([`support`]), and constructively recovers the commutator
//! generator b with H(x) = i(xb − bx) — together with the demonstration
//! that for the Frobenius norm, and only for it, skew-Hermitian operators
//! other than commutators exist ([`extraction`]). The [`harness`] module
//! drives all of it reproducibly from the CLI.

pub mod error;
pub mod extraction;
pub mod gauge;
pub mod harness;
pub mod spectral;
pub mod support;

pub use error::{Error, Result};
pub use extraction::{
    diagonal_grid_witness, dichotomy_report, extract_generator, make_commutator,
    rank_one_image_structure, rotation_witness, verify_commutator, Generator,
};
pub use gauge::{hlp_majorizes, rearrange, OrliczFn, PsiFn, SymmetricGauge};
pub use harness::{run, Command, Report, RunConfig};
pub use spectral::{
    eigh, ideal_norm, singular_values, trace_pair, trace_pair_re, ComplexMatrix, HermitianMatrix,
    RankOneOp,
};
pub use support::{
    hermitian_basis, is_skew_hermitian, semi_inner, support_functional, SuperOp,
    SupportFunctional,
};
