//! Exact symbolic combinatorics for level-`k` fusion path models and the
//! graded coinvariants of a deformed Heisenberg algebra.
//!
//! The crate has three layers:
//!
//! * **Fusion combinatorics** — the level-`k` Verlinde algebra on weights
//!   `0..=k` ([`verlinde`]), two equivalent path models counted by its
//!   structure constants, the bijection between them, concatenation
//!   recursions and a decomposition of level-`k` paths into level-1 paths
//!   ([`paths`]).
//! * **Characters** — three-variable graded generating functions of the path
//!   models, the right/left transfer-matrix recursions, a conjugation
//!   symmetry and reversal identities ([`characters`], [`poly`]).
//! * **Coinvariant oracle** — an independent exact linear-algebra
//!   computation of graded dimensions of cyclic modules over the deformed
//!   Heisenberg algebra (families `V`, `U`, `W`) and of their coinvariant
//!   quotients, used to cross-check every combinatorial prediction
//!   ([`heis`], [`linalg`]).
//!
//! The [`acceptance`] module bundles the full battery of cross-checks; the
//! `coinv` binary exposes everything on the command line.

pub mod acceptance;
pub mod characters;
pub mod error;
pub mod golden;
pub mod heis;
pub mod linalg;
pub mod paths;
pub mod poly;
pub mod verlinde;

pub use error::{Error, Result};
