//! Combinatorics and algebra of Lefschetz fibrations whose fibre is the type
//! `(A_m)` Milnor fibre.
//!
//! The first `m` vanishing cycles come from the chain of straight segments
//! between consecutive `(m+1)`-st roots of unity; the last one is given by an
//! arbitrary arc between two punctures. The crate decides whether that choice
//! yields the standard cotangent bundle of the sphere, and provides the
//! machinery behind the decision:
//!
//! * [`braid`]: braid words and a left-greedy normal form (word problem).
//! * [`arcs`]: isotopy classes of arcs, keyed by their half-twists.
//! * [`homology`]: the Picard–Lefschetz action on `H_n` of the fibre.
//! * [`lattice`]: intersection arithmetic on the total space.
//! * [`quiver`]: `(A_m)` quiver representations, twisted complexes, barcodes.
//! * [`hurwitz`]: Hurwitz moves and orbit enumeration.
//! * [`classify`]: the top-level verdict.

pub mod arcs;
pub mod braid;
pub mod classify;
pub mod error;
pub mod homology;
pub mod hurwitz;
pub mod lattice;
pub mod quiver;

pub use error::{Error, Result};
