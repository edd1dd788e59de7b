//! Unitary braiding operators, viewed two ways: as quantum gates acting on
//! n-qubit states through a braid-group representation, and as the local
//! weights of a closed-braid state sum that detects linking numbers.
//!
//! Modules:
//! - [`braid`]: braid-word syntax, group operations, closure data.
//! - [`rmatrix`]: the two-site operators `R`, `P`, `tau` and their algebraic checks.
//! - [`engine`]: sparse application of words to state vectors, dense oracle, traces.
//! - [`entanglement`]: product tests, Schmidt rank, measurement, GHZ demos.
//! - [`laurent`]: exact Laurent monomial sums in `a, b, c, Q`.
//! - [`statesum`]: bracket, normalized invariant and zero-one state sums.
//! - [`relations`]: virtual braid group relations at the representation level.
//! - [`cli`]: the command-line front end.

pub mod braid;
pub mod cli;
pub mod engine;
pub mod entanglement;
pub mod error;
pub mod fixtures;
pub mod laurent;
pub mod relations;
pub mod rmatrix;
pub mod statesum;

pub use braid::{BraidWord, ClosureData, Generator, GeneratorKind};
pub use engine::{QuantumState, WordOperator};
pub use error::{Error, Result};
pub use laurent::LaurentValue;
pub use rmatrix::{RParams, TwoSiteOperator};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
