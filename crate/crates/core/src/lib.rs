//! Exact excedance, descent and inversion distributions over the symmetric
//! and hyperoctahedral groups, the triangles that count them, and checkers
//! for log-concavity, strong synchronisation and recurrence certificates.
//!
//! All arithmetic is on arbitrary-precision integers.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod permstat;
pub mod properties;
pub mod recurrence;
pub mod sagan;
pub mod seq;

pub use error::{Error, Result};
pub use permstat::{Group, LengthParity, Parity, PermutationA, SignedPermutation, Statistic};
pub use recurrence::{Family, FamilyId, PairTable, TriangularArray};
pub use seq::ExactSeq;
