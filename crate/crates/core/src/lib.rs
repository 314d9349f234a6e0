//! Quasi-abelian codes over finite fields through their concatenated
//! structure.
//!
//! A code `C ⊆ F_q[H]^ℓ` closed under the action of the abelian group `H`
//! (with `gcd(q, |H|) = 1`) splits along the primitive idempotents of
//! `F_q[H]` into a direct sum of concatenations of minimal abelian codes
//! with outer codes over extension fields. This crate builds such codes from
//! their outer codes, recovers the outer codes of a given code, bounds the
//! minimum distance, and searches for good codes exhaustively.

pub mod algebra;
pub mod catalog;
pub mod concatenation;
pub mod descriptor;
pub mod error;
pub mod exec;
pub mod families;
pub mod idempotents;
pub mod linear_codes;
pub mod search;

pub use error::{Error, Result};
pub use exec::Exec;
