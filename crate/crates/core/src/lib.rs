//! Purely real (twisted) Hurwitz numbers by exhaustive enumeration, the
//! `2^m:1` correspondence between transposition words and pair-matching
//! sequences, and their realisation as simple constellations on possibly
//! non-orientable surfaces.
//!
//! Labels live in the signed ground set `{±1, …, ±n}` with `-k` standing
//! for `k̄`, so `τ` is negation. Products compose right to left:
//! `(p·q)(x) = p(q(x))`.

pub mod class;
pub mod constellation;
pub mod error;
pub mod factorization;
pub mod matching;
pub mod matching_seq;
pub mod parallel;
pub mod partition;
pub mod perm;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use factorization::{Transposition, TranspositionSeq};
pub use matching::{tau, PairMatching};
pub use matching_seq::MatchingSeq;
pub use partition::Partition;
pub use perm::{Permutation, SignedLabel};
