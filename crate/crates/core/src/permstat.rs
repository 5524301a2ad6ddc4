//! Type A permutations, Type B signed permutations, and the statistics
//! evaluated on them.
//!
//! Both element types use 1-based value semantics: a permutation of `[n]` is
//! stored as its one-line notation `π_1 … π_n`, and a signed permutation as
//! its window `π_1 … π_n` with `π(-i) = -π(i)` left implicit.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which group a statistic is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Group {
    TypeA,
    TypeB,
}

impl Group {
    fn label(self) -> &'static str {
        match self {
            Group::TypeA => "Type A",
            Group::TypeB => "Type B",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Statistic {
    /// `|{i : π_i > i}|`
    Exc,
    /// `|{i : π_i <= i}|`, the weak anti-excedances.
    Nexc,
    /// `|{i in [n-1] : π_i > π_{i+1}}|`
    Des,
    /// `|{i in [n-1] : π_i < π_{i+1}}|`
    Asc,
    Inv,
    /// Brenti's excedance: `|{i : π_{|π_i|} > π_i}| + |{i : π_i = -i}|`.
    ExcB,
    /// Weak excedance: `|{i : π_{|π_i|} > π_i}| + |{i : π_i = i}|`.
    WkexcB,
    /// Descents over `0..n-1` with `π_0 = 0`.
    DesB,
    AscB,
    /// Type B length: inversions of the window, plus pairs `i < j` with
    /// `-π_i > π_j`, plus the number of negative entries.
    InvB,
    Negs,
}

impl Statistic {
    pub const ALL: [Statistic; 11] = [
        Statistic::Exc,
        Statistic::Nexc,
        Statistic::Des,
        Statistic::Asc,
        Statistic::Inv,
        Statistic::ExcB,
        Statistic::WkexcB,
        Statistic::DesB,
        Statistic::AscB,
        Statistic::InvB,
        Statistic::Negs,
    ];

    pub fn group(self) -> Group {
        match self {
            Statistic::Exc | Statistic::Nexc | Statistic::Des | Statistic::Asc | Statistic::Inv => {
                Group::TypeA
            }
            _ => Group::TypeB,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Exc => "exc",
            Statistic::Nexc => "nexc",
            Statistic::Des => "des",
            Statistic::Asc => "asc",
            Statistic::Inv => "inv",
            Statistic::ExcB => "excB",
            Statistic::WkexcB => "wkexcB",
            Statistic::DesB => "desB",
            Statistic::AscB => "ascB",
            Statistic::InvB => "invB",
            Statistic::Negs => "negs",
        }
    }

    /// Number of possible values `0..=max` the statistic can take on a group
    /// element of size `n`. Distribution rows have exactly this length.
    pub fn row_len(self, n: usize) -> usize {
        match self {
            Statistic::Exc | Statistic::Des | Statistic::Asc => n.max(1),
            Statistic::Nexc => n + 1,
            Statistic::Inv => n * n.saturating_sub(1) / 2 + 1,
            Statistic::ExcB | Statistic::WkexcB | Statistic::DesB | Statistic::AscB => n + 1,
            Statistic::Negs => n + 1,
            Statistic::InvB => n * n + 1,
        }
    }

    fn mismatch(self, group: Group) -> Error {
        Error::StatisticMismatch {
            statistic: self.name(),
            group: group.label(),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .iter()
            .copied()
            .find(|st| {
                st.name().eq_ignore_ascii_case(s)
                    || st.name().eq_ignore_ascii_case(&s.replace(['_', '-'], ""))
            })
            .ok_or_else(|| Error::Unknown {
                kind: "statistic",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(value: usize) -> Parity {
        if value.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Membership in `B_n^+` (even `inv_B`) or `B_n^-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthParity {
    Plus,
    Minus,
}

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationA {
    images: Vec<u32>,
}

impl PermutationA {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("n must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let idx = (v as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on [{n}]"
                )));
            }
            seen[idx] = true;
        }
        Ok(PermutationA { images })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        PermutationA {
            images: (1..=n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> u32 {
        self.images[i - 1]
    }

    /// The composite `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &PermutationA) -> Result<PermutationA> {
        if self.n() != other.n() {
            return Err(Error::InvalidPermutation(format!(
                "cannot compose permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(PermutationA {
            images: other
                .images
                .iter()
                .map(|&j| self.apply(j as usize))
                .collect(),
        })
    }

    pub fn stat(&self, s: Statistic) -> Result<usize> {
        stat_a(&self.images, s)
    }

    pub fn parity(&self) -> Parity {
        Parity::of(inversions_a(&self.images))
    }

    pub fn is_derangement(&self) -> bool {
        is_derangement(&self.images)
    }
}

impl fmt::Display for PermutationA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of the hyperoctahedral group `B_n`, stored by its window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("n must be at least 1".into()));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let idx = (v.unsigned_abs() as usize).wrapping_sub(1);
            if idx >= n || seen[idx] {
                return Err(Error::InvalidPermutation(format!(
                    "absolute values of {window:?} are not a bijection on [{n}]"
                )));
            }
            seen[idx] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `π(i)` for any nonzero `i` in `±[n]`.
    pub fn apply(&self, i: i32) -> i32 {
        assert!(i != 0 && i.unsigned_abs() as usize <= self.n());
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i > 0 {
            v
        } else {
            -v
        }
    }

    pub fn stat(&self, s: Statistic) -> Result<usize> {
        stat_b(&self.window, s)
    }

    pub fn length_parity(&self) -> LengthParity {
        if inv_b(&self.window).is_multiple_of(2) {
            LengthParity::Plus
        } else {
            LengthParity::Minus
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

// Slice-level evaluators. `enumerate` calls these directly on its scratch
// buffers so the single-element types and the bulk counts share one
// definition of every statistic.

pub(crate) fn stat_a(images: &[u32], s: Statistic) -> Result<usize> {
    Ok(match s {
        Statistic::Exc => excedances_a(images),
        Statistic::Nexc => images.len() - excedances_a(images),
        Statistic::Des => images.windows(2).filter(|w| w[0] > w[1]).count(),
        Statistic::Asc => images.windows(2).filter(|w| w[0] < w[1]).count(),
        Statistic::Inv => inversions_a(images),
        other => return Err(other.mismatch(Group::TypeA)),
    })
}

pub(crate) fn excedances_a(images: &[u32]) -> usize {
    images
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize > i + 1)
        .count()
}

pub(crate) fn inversions_a<T: PartialOrd>(values: &[T]) -> usize {
    let mut count = 0;
    for (i, a) in values.iter().enumerate() {
        count += values[i + 1..].iter().filter(|b| a > b).count();
    }
    count
}

pub(crate) fn is_derangement(images: &[u32]) -> bool {
    images.iter().enumerate().all(|(i, &v)| v as usize != i + 1)
}

pub(crate) fn stat_b(window: &[i32], s: Statistic) -> Result<usize> {
    Ok(match s {
        Statistic::ExcB => {
            brenti_pairs(window)
                + window
                    .iter()
                    .enumerate()
                    .filter(|&(i, &v)| v == -(i as i32 + 1))
                    .count()
        }
        Statistic::WkexcB => {
            brenti_pairs(window)
                + window
                    .iter()
                    .enumerate()
                    .filter(|&(i, &v)| v == i as i32 + 1)
                    .count()
        }
        Statistic::DesB => descents_b(window),
        Statistic::AscB => {
            let mut prev = 0;
            let mut count = 0;
            for &v in window {
                if prev < v {
                    count += 1;
                }
                prev = v;
            }
            count
        }
        Statistic::InvB => inv_b(window),
        Statistic::Negs => negs(window),
        other => return Err(other.mismatch(Group::TypeB)),
    })
}

/// `|{i : π_{|π_i|} > π_i}|`
fn brenti_pairs(window: &[i32]) -> usize {
    window
        .iter()
        .filter(|&&v| window[v.unsigned_abs() as usize - 1] > v)
        .count()
}

fn descents_b(window: &[i32]) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for &v in window {
        if prev > v {
            count += 1;
        }
        prev = v;
    }
    count
}

pub(crate) fn negs(window: &[i32]) -> usize {
    window.iter().filter(|&&v| v < 0).count()
}

pub(crate) fn inv_b(window: &[i32]) -> usize {
    let mut crossed = 0;
    for (i, &a) in window.iter().enumerate() {
        crossed += window[i + 1..].iter().filter(|&&b| -a > b).count();
    }
    inversions_a(window) + crossed + negs(window)
}
