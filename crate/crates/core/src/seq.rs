//! Finite sequences of arbitrary-precision non-negative integers.

use std::fmt;
use std::ops::Index;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-empty sequence `(a_0, ..., a_m)` of exact non-negative integers.
///
/// Every distribution row and recurrence row in the crate is carried as an
/// `ExactSeq`. Indexing starts at zero; any k-offset a family uses is kept by
/// the container that owns the row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactSeq(Vec<BigUint>);

impl ExactSeq {
    pub fn new(values: Vec<BigUint>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(ExactSeq(values))
    }

    /// Builds a sequence from machine integers. Panics on an empty slice.
    pub fn from_u64s(values: &[u64]) -> Self {
        assert!(!values.is_empty(), "ExactSeq must be non-empty");
        ExactSeq(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn zeros(len: usize) -> Self {
        assert!(len > 0, "ExactSeq must be non-empty");
        ExactSeq(vec![BigUint::default(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing clippy expects.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.0
    }

    /// Entry `k`, or zero for any index outside the sequence.
    pub fn get_or_zero(&self, k: i64) -> BigUint {
        if k < 0 {
            return BigUint::default();
        }
        self.0.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigUint> {
        self.0.iter()
    }

    pub fn sum(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Entries rendered as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.0.iter().map(|v| v.to_str_radix(10)).collect()
    }

    /// Entries that fit in `u64`, or `None` if any entry is larger.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0
            .iter()
            .map(|v| u64::try_from(v).ok())
            .collect::<Option<Vec<_>>>()
    }
}

impl Index<usize> for ExactSeq {
    type Output = BigUint;

    fn index(&self, k: usize) -> &BigUint {
        &self.0[k]
    }
}

impl<'a> IntoIterator for &'a ExactSeq {
    type Item = &'a BigUint;
    type IntoIter = std::slice::Iter<'a, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ExactSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for ExactSeq {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(serializer)
    }
}
