//! Predicates on sequences and pairs of sequences: log-concavity,
//! unimodality, synchronisation, strong synchronisation, ratio-alternation,
//! and the exhaustive mixed-sequence checks that relate them.
//!
//! Every predicate returns a [`PropertyReport`] listing the index tuples at
//! which the defining inequality fails. Inequalities are evaluated exactly as
//! stated, zeros included.

use std::cmp::{max, min};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seq::ExactSeq;

/// Default bound on the number of mixed sequences an exhaustive scan visits.
pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: bool,
    /// Index tuples at which the property fails. Empty iff `verdict`.
    pub witnesses: Vec<Vec<usize>>,
    /// A concrete offending sequence, for scans over families of sequences.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<ExactSeq>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn from_witnesses(property: impl Into<String>, witnesses: Vec<Vec<usize>>) -> Self {
        PropertyReport {
            property: property.into(),
            verdict: witnesses.is_empty(),
            witnesses,
            example: None,
            notes: Vec::new(),
        }
    }

    pub fn pass(property: impl Into<String>) -> Self {
        Self::from_witnesses(property, Vec::new())
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// First coordinate of every witness, deduplicated in order.
    pub fn witness_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for w in &self.witnesses {
            if let Some(&i) = w.first() {
                if out.last() != Some(&i) {
                    out.push(i);
                }
            }
        }
        out
    }
}

/// Which of the two ratio-alternating patterns a pair satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RatioPattern {
    /// `a_{2i} <= b_{2i}` and `a_{2i+1} >= b_{2i+1}`.
    Pattern22,
    /// `a_{2i} >= b_{2i}` and `a_{2i+1} <= b_{2i+1}`.
    Pattern23,
    Both,
    Neither,
}

fn check_lengths(a: &ExactSeq, b: &ExactSeq) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

fn lc_holds(v: &[BigUint], i: usize) -> bool {
    &v[i] * &v[i] >= &v[i - 1] * &v[i + 1]
}

fn lc_witnesses(a: &ExactSeq, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    let v = a.values();
    (1..v.len().saturating_sub(1))
        .filter(|&i| keep(i) && !lc_holds(v, i))
        .map(|i| vec![i])
        .collect()
}

/// `a_i^2 >= a_{i-1} a_{i+1}` for every interior `i`.
pub fn is_log_concave(a: &ExactSeq) -> PropertyReport {
    PropertyReport::from_witnesses("log-concave", lc_witnesses(a, |_| true))
}

/// The log-concavity inequality at even interior indices only.
pub fn is_even_log_concave(a: &ExactSeq) -> PropertyReport {
    PropertyReport::from_witnesses("even log-concave", lc_witnesses(a, |i| i % 2 == 0))
}

/// The log-concavity inequality at odd interior indices only.
pub fn is_odd_log_concave(a: &ExactSeq) -> PropertyReport {
    PropertyReport::from_witnesses("odd log-concave", lc_witnesses(a, |i| i % 2 == 1))
}

/// Weakly increasing up to some peak, weakly decreasing after it.
///
/// On failure the witness is `[i, j]`: a strict drop `a_i > a_{i+1}` followed
/// by a strict rise `a_j < a_{j+1}` with `j > i`.
pub fn is_unimodal(a: &ExactSeq) -> PropertyReport {
    let v = a.values();
    let first_drop = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]);
    let witnesses = match first_drop {
        Some(i) => (i + 1..v.len() - 1)
            .find(|&j| v[j] < v[j + 1])
            .map(|j| vec![vec![i, j]])
            .unwrap_or_default(),
        None => Vec::new(),
    };
    PropertyReport::from_witnesses("unimodal", witnesses)
}

/// True iff no zero entry sits strictly between two nonzero entries.
pub fn has_no_internal_zeros(a: &ExactSeq) -> bool {
    let v = a.values();
    let nonzero: Vec<usize> = (0..v.len())
        .filter(|&i| v[i] != BigUint::default())
        .collect();
    match (nonzero.first(), nonzero.last()) {
        (Some(&lo), Some(&hi)) => (lo..=hi).all(|i| v[i] != BigUint::default()),
        _ => true,
    }
}

/// Witness tags used by [`is_synchronised`].
pub mod sync_failure {
    pub const A_NOT_LOG_CONCAVE: usize = 0;
    pub const B_NOT_LOG_CONCAVE: usize = 1;
    /// `a_{k-1} b_{k+1} <= a_k b_k` fails.
    pub const LEFT_CROSS: usize = 2;
    /// `a_{k+1} b_{k-1} <= a_k b_k` fails.
    pub const RIGHT_CROSS: usize = 3;
}

/// Both sequences log-concave and, for every interior `k`,
/// `a_{k-1} b_{k+1} <= a_k b_k` and `a_{k+1} b_{k-1} <= a_k b_k`.
///
/// Witnesses are `[k, tag]` with tags from [`sync_failure`].
pub fn is_synchronised(a: &ExactSeq, b: &ExactSeq) -> Result<PropertyReport> {
    check_lengths(a, b)?;
    let (av, bv) = (a.values(), b.values());
    let mut witnesses = Vec::new();
    for k in 1..av.len().saturating_sub(1) {
        if !lc_holds(av, k) {
            witnesses.push(vec![k, sync_failure::A_NOT_LOG_CONCAVE]);
        }
        if !lc_holds(bv, k) {
            witnesses.push(vec![k, sync_failure::B_NOT_LOG_CONCAVE]);
        }
        let diag = &av[k] * &bv[k];
        if &av[k - 1] * &bv[k + 1] > diag {
            witnesses.push(vec![k, sync_failure::LEFT_CROSS]);
        }
        if &av[k + 1] * &bv[k - 1] > diag {
            witnesses.push(vec![k, sync_failure::RIGHT_CROSS]);
        }
    }
    Ok(PropertyReport::from_witnesses("synchronised", witnesses))
}

fn strong_sync_holds(av: &[BigUint], bv: &[BigUint], k: usize) -> bool {
    let lo = min(&av[k], &bv[k]);
    lo * lo >= max(&av[k + 1], &bv[k + 1]) * max(&av[k - 1], &bv[k - 1])
}

/// `min(a_k, b_k)^2 >= max(a_{k+1}, b_{k+1}) * max(a_{k-1}, b_{k-1})` for
/// every interior `k`.
pub fn is_strongly_synchronised(a: &ExactSeq, b: &ExactSeq) -> Result<PropertyReport> {
    check_lengths(a, b)?;
    let (av, bv) = (a.values(), b.values());
    let witnesses = (1..av.len().saturating_sub(1))
        .filter(|&k| !strong_sync_holds(av, bv, k))
        .map(|k| vec![k])
        .collect();
    Ok(PropertyReport::from_witnesses(
        "strongly synchronised",
        witnesses,
    ))
}

fn first_pattern_failure(a: &ExactSeq, b: &ExactSeq, a_even_dominated: bool) -> Option<usize> {
    (0..a.len()).find(|&i| {
        let even = i % 2 == 0;
        if even == a_even_dominated {
            a[i] > b[i]
        } else {
            a[i] < b[i]
        }
    })
}

pub fn ratio_pattern(a: &ExactSeq, b: &ExactSeq) -> Result<RatioPattern> {
    check_lengths(a, b)?;
    let p22 = first_pattern_failure(a, b, true).is_none();
    let p23 = first_pattern_failure(a, b, false).is_none();
    Ok(match (p22, p23) {
        (true, true) => RatioPattern::Both,
        (true, false) => RatioPattern::Pattern22,
        (false, true) => RatioPattern::Pattern23,
        (false, false) => RatioPattern::Neither,
    })
}

/// On failure the single witness is `[i, j]`: the first index breaking the
/// even-dominated pattern and the first index breaking the even-dominating one.
pub fn is_ratio_alternating(a: &ExactSeq, b: &ExactSeq) -> Result<(PropertyReport, RatioPattern)> {
    let pattern = ratio_pattern(a, b)?;
    let witnesses = if pattern == RatioPattern::Neither {
        vec![vec![
            first_pattern_failure(a, b, true).unwrap_or(0),
            first_pattern_failure(a, b, false).unwrap_or(0),
        ]]
    } else {
        Vec::new()
    };
    Ok((
        PropertyReport::from_witnesses("ratio-alternating", witnesses),
        pattern,
    ))
}

/// Checks that every sequence `c` with `c_k ∈ {T^1_k, …, T^l_k}` is
/// log-concave.
///
/// The mixed sequences are visited in counter order with position 0 as the
/// most significant digit and `T^1` as digit 0. The scan stops at the first
/// non-log-concave sequence; its digit vector is the witness and the sequence
/// itself is `example`.
pub fn s_family_all_log_concave(seqs: &[ExactSeq], exhaustive_cap: u64) -> Result<PropertyReport> {
    let Some(first) = seqs.first() else {
        return Err(Error::EmptySequence);
    };
    for s in &seqs[1..] {
        check_lengths(first, s)?;
    }
    let len = first.len();
    let l = seqs.len() as u64;
    let needed = (0..len).try_fold(1u64, |acc, _| acc.checked_mul(l));
    match needed {
        Some(count) if count <= exhaustive_cap => {}
        _ => {
            return Err(Error::CapExceeded {
                needed: format!("{l}^{len}"),
                cap: exhaustive_cap,
            })
        }
    }

    let columns: Vec<Vec<&BigUint>> = (0..len)
        .map(|k| seqs.iter().map(|s| &s[k]).collect())
        .collect();
    let mut digits = vec![0usize; len];
    let found = scan_mixed(&columns, &mut digits, 0);

    let name = "all mixed sequences log-concave";
    Ok(match found {
        None => PropertyReport::pass(name),
        Some(bad_index) => {
            let example = ExactSeq::new(
                digits
                    .iter()
                    .enumerate()
                    .map(|(k, &d)| columns[k][d].clone())
                    .collect(),
            )?;
            let mut report = PropertyReport::from_witnesses(name, vec![digits]);
            report.example = Some(example);
            report.with_note(format!("log-concavity fails at index {bad_index}"))
        }
    })
}

/// Depth-first walk over digit vectors. A prefix whose last complete triple
/// already fails is reported immediately with the remaining digits at zero,
/// which is the first failing vector in counter order.
fn scan_mixed(columns: &[Vec<&BigUint>], digits: &mut [usize], pos: usize) -> Option<usize> {
    if pos == columns.len() {
        return None;
    }
    for d in 0..columns[pos].len() {
        digits[pos] = d;
        if pos >= 2 {
            let mid = columns[pos - 1][digits[pos - 1]];
            let left = columns[pos - 2][digits[pos - 2]];
            let right = columns[pos][d];
            if mid * mid < left * right {
                for rest in digits[pos + 1..].iter_mut() {
                    *rest = 0;
                }
                return Some(pos - 1);
            }
        }
        if let Some(bad) = scan_mixed(columns, digits, pos + 1) {
            return Some(bad);
        }
    }
    None
}

/// Strong synchronisation computed by the min/max criterion agrees with the
/// exhaustive log-concavity scan of `S(a, b)`.
pub fn mixed_sequence_cross_check(
    a: &ExactSeq,
    b: &ExactSeq,
    exhaustive_cap: u64,
) -> Result<PropertyReport> {
    let strong = is_strongly_synchronised(a, b)?;
    let family = s_family_all_log_concave(&[a.clone(), b.clone()], exhaustive_cap)?;
    let name = "strong synchronisation iff every mixed sequence is log-concave";
    if strong.verdict == family.verdict {
        return Ok(PropertyReport::pass(name).with_note(format!(
            "both sides {}",
            if strong.verdict { "true" } else { "false" }
        )));
    }
    let mut witnesses = strong.witnesses.clone();
    witnesses.extend(family.witnesses.clone());
    Ok(
        PropertyReport::from_witnesses(name, witnesses).with_note(format!(
            "min/max criterion says {}, exhaustive scan says {}",
            strong.verdict, family.verdict
        )),
    )
}

/// True iff every interior entry of both sequences is positive.
pub fn interior_positive(a: &ExactSeq, b: &ExactSeq) -> bool {
    let zero = BigUint::default();
    (1..a.len().saturating_sub(1)).all(|k| a[k] != zero && b.get_or_zero(k as i64) != zero)
}

/// `min(a_j,b_j) * min(a_l,b_l) >= max(a_{j-i},b_{j-i}) * max(a_{l+i},b_{l+i})`
/// for all `j <= l` and `i >= 1` with every index in range. Witnesses are
/// `[j, l, i]`.
///
/// The equivalence with strong synchronisation is only claimed when every
/// interior entry is positive; otherwise the report carries a note saying so.
pub fn interlacing_check(a: &ExactSeq, b: &ExactSeq) -> Result<PropertyReport> {
    check_lengths(a, b)?;
    let m = a.len();
    let lo: Vec<&BigUint> = (0..m).map(|k| min(&a[k], &b[k])).collect();
    let hi: Vec<&BigUint> = (0..m).map(|k| max(&a[k], &b[k])).collect();
    let mut witnesses = Vec::new();
    for j in 1..m {
        for l in j..m - 1 {
            let inner = lo[j] * lo[l];
            for i in 1..=j.min(m - 1 - l) {
                if inner < hi[j - i] * hi[l + i] {
                    witnesses.push(vec![j, l, i]);
                }
            }
        }
    }
    let report = PropertyReport::from_witnesses("interlacing min/max inequality", witnesses);
    Ok(if interior_positive(a, b) {
        report
    } else {
        report.with_note(
            "positivity hypothesis unmet: equivalence with strong synchronisation not asserted",
        )
    })
}

/// For a ratio-alternating pair, the parity-restricted log-concavity
/// conditions hold iff the pair is strongly synchronised.
///
/// Pattern (2.2): `a` even log-concave and `b` odd log-concave. Pattern
/// (2.3): `a` odd log-concave and `b` even log-concave. Pairs matching
/// neither pattern are rejected with [`Error::NotApplicable`].
pub fn ratio_parity_check(a: &ExactSeq, b: &ExactSeq) -> Result<PropertyReport> {
    let pattern = ratio_pattern(a, b)?;
    let parity_side = match pattern {
        RatioPattern::Neither => {
            return Err(Error::NotApplicable("pair is not ratio-alternating".into()))
        }
        RatioPattern::Pattern22 | RatioPattern::Both => {
            is_even_log_concave(a).verdict && is_odd_log_concave(b).verdict
        }
        RatioPattern::Pattern23 => is_odd_log_concave(a).verdict && is_even_log_concave(b).verdict,
    };
    let strong = is_strongly_synchronised(a, b)?;
    let name = "parity log-concavity iff strong synchronisation";
    if parity_side == strong.verdict {
        Ok(PropertyReport::pass(name).with_note(format!("both sides {parity_side}")))
    } else {
        let mut witnesses = strong.witnesses;
        if witnesses.is_empty() {
            witnesses.push(vec![0]);
        }
        Ok(
            PropertyReport::from_witnesses(name, witnesses).with_note(format!(
                "parity side {parity_side}, strong synchronisation {}",
                strong.verdict
            )),
        )
    }
}
