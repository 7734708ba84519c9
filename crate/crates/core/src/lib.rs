//! Generalised Euler characteristics of formulas in Gödel propositional logic.
//!
//! The Lindenbaum algebra of Gödel logic over `n` variables is a finite
//! distributive lattice whose join-irreducible elements form a forest. Each
//! join-irreducible corresponds to an *order pattern*: the equality/strict
//! order that an assignment induces on `0`, the variable values and `1`.
//! This crate works entirely on that combinatorial side:
//!
//! * [`formula`] parses and prints formulas.
//! * [`semantics`] evaluates them over finite chains of truth levels.
//! * [`patterns`] enumerates order patterns and the forest structure on them.
//! * [`counting`] computes the counts `T(n, k)` and `P(n, k)` exactly.
//! * [`characteristics`] computes `χ_k(φ)` and decides tautology in `G_{k+1}`
//!   and `G_∞`.
//! * [`valuations`] represents valuations by their weights on
//!   join-irreducibles and does exact linear algebra on them.
//! * [`oracle`] holds brute-force reference implementations.
//! * [`cli`] is the command-line front end used by the `godel-chi` binary.
//!
//! ```
//! use godel_chi::{characteristics, formula::Formula};
//!
//! let f: Formula = "~~X1".parse().unwrap();
//! assert_eq!(characteristics::chi(&f, 1, 1).unwrap(), 1u32.into());
//! assert_eq!(characteristics::chi(&f, 1, 2).unwrap(), 2u32.into());
//! ```

pub mod characteristics;
pub mod cli;
pub mod counting;
mod error;
pub mod formula;
pub mod oracle;
pub mod patterns;
pub mod semantics;
pub mod valuations;

pub use error::{Error, Result};
pub use formula::{Formula, ParseError};
pub use patterns::{OrderPattern, Permutation};
pub use semantics::LevelAssignment;
