//! Linear-quiver algebra over the two-element field: representations,
//! interval decompositions, and twisted complexes.

pub mod field;
pub mod rep;
pub mod twisted;

pub use field::{Field, Gf2, Matrix};
pub use rep::{decompose, decompose_shifted, Barcode, IntervalModule, QuiverRep, QuiverRepJson};
pub use twisted::{
    cone, evaluation, iterated_twist, summand_test, twist, Label, Summand, TwistedComplex,
    TwistedMorphism, Violation,
};
