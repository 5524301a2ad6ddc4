//! Brute-force distribution tables over `S_n`, its even/odd halves and
//! derangements, and over `B_n` and its two length-parity classes.
//!
//! Permutations are visited in lexicographic order, split into rank ranges
//! that run in parallel. Each range keeps local `u64` counters that are summed
//! at the end, so the result does not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permstat::{self, Group, Parity, Statistic};
use crate::properties::PropertyReport;
use crate::seq::ExactSeq;

/// Largest `n` whose `n!` fits the `u64` rank space used for partitioning.
const HARD_LIMIT_A: usize = 20;
/// Largest `n` with `2^n n!` below `u64::MAX`.
const HARD_LIMIT_B: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassFilterA {
    All,
    Even,
    Odd,
    Derangement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassFilterB {
    All,
    Plus,
    Minus,
}

impl FromStr for ClassFilterA {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(ClassFilterA::All),
            "even" | "plus" => Ok(ClassFilterA::Even),
            "odd" | "minus" => Ok(ClassFilterA::Odd),
            "derangement" | "derangements" => Ok(ClassFilterA::Derangement),
            _ => Err(Error::Unknown {
                kind: "Type A class",
                name: s.to_string(),
            }),
        }
    }
}

impl FromStr for ClassFilterB {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(ClassFilterB::All),
            "plus" | "even" => Ok(ClassFilterB::Plus),
            "minus" | "odd" => Ok(ClassFilterB::Minus),
            _ => Err(Error::Unknown {
                kind: "Type B class",
                name: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for ClassFilterA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassFilterA::All => "all",
            ClassFilterA::Even => "even",
            ClassFilterA::Odd => "odd",
            ClassFilterA::Derangement => "derangement",
        })
    }
}

impl fmt::Display for ClassFilterB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassFilterB::All => "all",
            ClassFilterB::Plus => "plus",
            ClassFilterB::Minus => "minus",
        })
    }
}

/// Soft ceilings on `n` for brute-force enumeration.
///
/// The defaults keep a call under a few minutes on a desktop. Raising them is
/// allowed up to the point where counters would overflow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_n_a: usize,
    pub max_n_b: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_n_a: 12,
            max_n_b: 9,
        }
    }
}

impl EnumerationLimits {
    /// The largest sizes the counters can represent.
    pub fn overridden() -> Self {
        EnumerationLimits {
            max_n_a: HARD_LIMIT_A,
            max_n_b: HARD_LIMIT_B,
        }
    }

    /// Rejects `n` above the ceiling for `group`.
    pub fn check(&self, group: Group, n: usize) -> Result<()> {
        let (soft, hard, label) = match group {
            Group::TypeA => (self.max_n_a, HARD_LIMIT_A, "S_n"),
            Group::TypeB => (self.max_n_b, HARD_LIMIT_B, "B_n"),
        };
        let limit = soft.min(hard);
        if n > limit {
            return Err(Error::SizeLimit {
                group: label,
                n,
                limit,
            });
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPermutation("n must be at least 1".into()));
    }
    Ok(())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Counts of statistic value `k` over the selected class of `S_n`, for
/// `k = 0..row_len`. Uses the default enumeration limits.
pub fn distribution_a(n: usize, stat: Statistic, filter: ClassFilterA) -> Result<ExactSeq> {
    distribution_a_with(n, stat, filter, &EnumerationLimits::default())
}

pub fn distribution_a_with(
    n: usize,
    stat: Statistic,
    filter: ClassFilterA,
    limits: &EnumerationLimits,
) -> Result<ExactSeq> {
    check_n(n)?;
    if stat.group() != Group::TypeA {
        return Err(Error::StatisticMismatch {
            statistic: stat.name(),
            group: "Type A",
        });
    }
    limits.check(Group::TypeA, n)?;
    let counts = count_over_permutations(n, stat.row_len(n), |images, parity, counts| {
        let keep = match filter {
            ClassFilterA::All => true,
            ClassFilterA::Even => parity == Parity::Even,
            ClassFilterA::Odd => parity == Parity::Odd,
            ClassFilterA::Derangement => permstat::is_derangement(images),
        };
        if keep {
            let v = permstat::stat_a(images, stat).expect("Type A statistic");
            counts[v] += 1;
        }
    });
    to_seq(counts)
}

/// Counts of statistic value `k` over the selected class of `B_n`.
pub fn distribution_b(n: usize, stat: Statistic, filter: ClassFilterB) -> Result<ExactSeq> {
    distribution_b_with(n, stat, filter, &EnumerationLimits::default())
}

pub fn distribution_b_with(
    n: usize,
    stat: Statistic,
    filter: ClassFilterB,
    limits: &EnumerationLimits,
) -> Result<ExactSeq> {
    check_n(n)?;
    if stat.group() != Group::TypeB {
        return Err(Error::StatisticMismatch {
            statistic: stat.name(),
            group: "Type B",
        });
    }
    limits.check(Group::TypeB, n)?;
    let mut window = vec![0i32; n];
    let counts = count_over_permutations(n, stat.row_len(n), move |images, _, counts| {
        for mask in 0u32..(1u32 << n) {
            for (i, (&v, w)) in images.iter().zip(window.iter_mut()).enumerate() {
                *w = if mask >> i & 1 == 1 {
                    -(v as i32)
                } else {
                    v as i32
                };
            }
            let keep = match filter {
                ClassFilterB::All => true,
                ClassFilterB::Plus => permstat::inv_b(&window).is_multiple_of(2),
                ClassFilterB::Minus => permstat::inv_b(&window) % 2 == 1,
            };
            if keep {
                let v = permstat::stat_b(&window, stat).expect("Type B statistic");
                counts[v] += 1;
            }
        }
    });
    to_seq(counts)
}

fn to_seq(counts: Vec<u64>) -> Result<ExactSeq> {
    ExactSeq::new(counts.into_iter().map(BigUint::from).collect())
}

/// Runs `visit` on every permutation of `[n]` together with its sign, in
/// parallel over lexicographic rank ranges, and sums the per-range counters.
fn count_over_permutations<F>(n: usize, row_len: usize, visit: F) -> Vec<u64>
where
    F: FnMut(&[u32], Parity, &mut [u64]) + Clone + Send + Sync,
{
    let total = factorial(n);
    let pieces = (rayon::current_num_threads() as u64 * 8).clamp(1, total);
    let step = total.div_ceil(pieces);
    let ranges: Vec<(u64, u64)> = (0..pieces)
        .map(|p| (p * step, ((p + 1) * step).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    ranges
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut visit = visit.clone();
            let mut counts = vec![0u64; row_len];
            let (mut images, mut parity) = unrank(n, lo);
            for rank in lo..hi {
                visit(&images, parity, &mut counts);
                if rank + 1 < hi {
                    let swaps = next_permutation(&mut images);
                    if swaps % 2 == 1 {
                        parity = parity.combine(Parity::Odd);
                    }
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; row_len],
            |mut acc, part| {
                for (a, p) in acc.iter_mut().zip(part) {
                    *a += p;
                }
                acc
            },
        )
}

/// The permutation of lexicographic rank `rank`, with its sign. The sign is
/// the parity of the Lehmer code digit sum, which equals the inversion count.
fn unrank(n: usize, mut rank: u64) -> (Vec<u32>, Parity) {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut images = Vec::with_capacity(n);
    let mut inversions = 0usize;
    for i in (0..n).rev() {
        let f = factorial(i);
        let digit = (rank / f) as usize;
        rank %= f;
        inversions += digit;
        images.push(pool.remove(digit));
    }
    (images, Parity::of(inversions))
}

/// Advances to the next permutation in lexicographic order and returns the
/// number of transpositions applied. Returns 0 at the last permutation.
fn next_permutation(a: &mut [u32]) -> usize {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return 0;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| a[j] > a[i])
        .expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    1 + (n - i - 1) / 2
}

/// Descents and excedances share a distribution on `S_n`, and `des_B` and
/// `exc_B` share one on `B_n`.
pub fn equidistribution_check(n: usize) -> Result<PropertyReport> {
    equidistribution_check_with(n, &EnumerationLimits::default())
}

pub fn equidistribution_check_with(n: usize, limits: &EnumerationLimits) -> Result<PropertyReport> {
    let des = distribution_a_with(n, Statistic::Des, ClassFilterA::All, limits)?;
    let exc = distribution_a_with(n, Statistic::Exc, ClassFilterA::All, limits)?;
    let des_b = distribution_b_with(n, Statistic::DesB, ClassFilterB::All, limits)?;
    let exc_b = distribution_b_with(n, Statistic::ExcB, ClassFilterB::All, limits)?;
    let mut witnesses = Vec::new();
    for k in 0..des.len() {
        if des[k] != exc[k] {
            witnesses.push(vec![0, k]);
        }
    }
    for k in 0..des_b.len() {
        if des_b[k] != exc_b[k] {
            witnesses.push(vec![1, k]);
        }
    }
    Ok(
        PropertyReport::from_witnesses("descent/excedance equidistribution", witnesses)
            .with_note(format!("type A row {des}, type B row {des_b}")),
    )
}
