//! Nondeterministic automatic complexity of binary words.
//!
//! The automatic complexity `A_N(x)` of a word `x` is the least number of
//! states of an NFA (no ε-moves, one initial and one accepting state) that
//! has exactly one accepting walk of length `|x|`, that walk spelling `x`.
//!
//! The crate is split the same way the computation is:
//!
//! - [`words`]: packed binary words plus the Möbius / periodic-word /
//!   necklace counting functions.
//! - [`nfa`]: the automaton model, exact walk counting, unique-word
//!   extraction, alternate-route analysis and DOT export.
//! - [`search`]: exact `A_N(x)` by iterative deepening over canonical state
//!   sequences, pruned with trees of lumps.
//! - [`census`]: exhaustive per-length tables `s_q(n)`, `r_q(n)`, the
//!   limiting-value formulas and stabilization checks.
//! - [`oracle`]: a slow, unpruned reference search used for verification.

pub mod census;
mod error;
pub mod nfa;
pub mod oracle;
pub mod search;
pub mod words;

pub use census::{CensusTable, ExponentReading};
pub use error::{Error, Result};
pub use nfa::{Nfa, Transition};
pub use search::{complexity, LumpTree, StateSequence, WitnessResult};
pub use words::Word;
