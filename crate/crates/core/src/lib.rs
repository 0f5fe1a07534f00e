//! Exact-arithmetic toolkit relating the Spekkens toy model to quantum
//! mechanics over the finite field F₅.
//!
//! The crate enumerates both state spaces, checks the reference tables and
//! identities exhaustively, and classifies which of the toy model's 24
//! entangled pair states have an F₅ counterpart with identical measurement
//! behaviour.

pub mod cli;
pub mod correspondence;
pub mod error;
pub mod f5qm;
pub mod field;
pub mod outcome;
pub mod projective;
pub mod spekkens;
pub mod verify;

pub use error::{Error, Result};
pub use field::F5;
