//! Exact triangles for every sequence family, computed from their
//! recurrences, plus the nine-term expansions of `P_{n,k}^2 - P_{n,k+1}P_{n,k-1}`.
//!
//! Out-of-range reads (`k < 0` or past the end of the previous row) are zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::properties::PropertyReport;
use crate::seq::ExactSeq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum FamilyId {
    /// Eulerian numbers `A_{n,k}`, `k = 0..n-1`.
    EulerA,
    /// Even/odd excedance counts `P_{n,k}`, `Q_{n,k}`.
    PqA,
    /// Type B Eulerian numbers `B_{n,k}`, `k = 0..n`.
    EulerB,
    /// Plus/minus excedance counts `P^B_{n,k}`, `Q^B_{n,k}`.
    PqB,
    /// Second-order Eulerian numbers `H_{n,k}`, `k = 1..n`.
    SecondOrderEuler,
    /// Gamma coefficients of the Eulerian polynomial, `k = 0..⌊(n-1)/2⌋`.
    GammaA,
    /// Gamma coefficients of the Type B Eulerian polynomial, `k = 0..⌊n/2⌋`.
    GammaB,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::EulerA,
        FamilyId::PqA,
        FamilyId::EulerB,
        FamilyId::PqB,
        FamilyId::SecondOrderEuler,
        FamilyId::GammaA,
        FamilyId::GammaB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::EulerA => "eulerA",
            FamilyId::PqA => "pqA",
            FamilyId::EulerB => "eulerB",
            FamilyId::PqB => "pqB",
            FamilyId::SecondOrderEuler => "secondOrderEuler",
            FamilyId::GammaA => "gammaA",
            FamilyId::GammaB => "gammaB",
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, FamilyId::PqA | FamilyId::PqB)
    }

    /// Smallest k stored in each row.
    pub fn k_offset(self) -> usize {
        match self {
            FamilyId::SecondOrderEuler => 1,
            _ => 0,
        }
    }

    /// Number of entries in row `n`.
    pub fn row_len(self, n: usize) -> usize {
        match self {
            FamilyId::EulerA | FamilyId::PqA => n,
            FamilyId::EulerB | FamilyId::PqB => n + 1,
            FamilyId::SecondOrderEuler => n,
            FamilyId::GammaA => (n - 1) / 2 + 1,
            FamilyId::GammaB => n / 2 + 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

/// Rows `1..=n_max` of a family. Row `n` is stored at position `n - 1` and
/// its first entry corresponds to `k = family.k_offset()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularArray {
    /// `None` for triangles built from an arbitrary coefficient rule.
    pub family: Option<FamilyId>,
    pub k_offset: usize,
    rows: Vec<ExactSeq>,
}

impl TriangularArray {
    pub(crate) fn from_rows(
        family: Option<FamilyId>,
        k_offset: usize,
        rows: Vec<ExactSeq>,
    ) -> Self {
        TriangularArray {
            family,
            k_offset,
            rows,
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// Row `n`, for `1 <= n <= n_max`.
    pub fn row(&self, n: usize) -> &ExactSeq {
        assert!(n >= 1 && n <= self.rows.len(), "row {n} not computed");
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> &[ExactSeq] {
        &self.rows
    }

    /// Entry `(n, k)` in the family's own k coordinates, zero outside the row.
    pub fn entry(&self, n: usize, k: i64) -> BigUint {
        self.row(n).get_or_zero(k - self.k_offset as i64)
    }
}

/// Two triangles over the same index ranges, such as `(P, Q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairTable {
    pub first: TriangularArray,
    pub second: TriangularArray,
}

impl PairTable {
    pub fn n_max(&self) -> usize {
        self.first.n_max()
    }
}

/// Builds rows `2..=n_max` from `base`, where row `n` has entries for
/// `k = 0..len(n)` and `next(n, k, prev)` returns the new entry.
fn grow<F>(n_max: usize, base: ExactSeq, len: impl Fn(usize) -> usize, next: F) -> Vec<ExactSeq>
where
    F: Fn(u64, u64, &ExactSeq) -> BigUint,
{
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut rows = Vec::with_capacity(n_max);
    rows.push(base);
    for n in 2..=n_max {
        let prev = rows.last().expect("non-empty");
        let row: Vec<BigUint> = (0..len(n))
            .map(|k| next(n as u64, k as u64, prev))
            .collect();
        rows.push(ExactSeq::new(row).expect("rows are non-empty"));
    }
    rows
}

fn at(row: &ExactSeq, k: u64, shift: u64) -> BigUint {
    row.get_or_zero(k as i64 - shift as i64)
}

/// `A_{n,k} = (k+1) A_{n-1,k} + (n-k) A_{n-1,k-1}` from `A_1 = (1)`.
pub fn eulerian_a(n_max: usize) -> TriangularArray {
    let rows = grow(
        n_max,
        ExactSeq::from_u64s(&[1]),
        |n| n,
        |n, k, prev| (k + 1) * at(prev, k, 0) + (n - k) * at(prev, k, 1),
    );
    TriangularArray::from_rows(Some(FamilyId::EulerA), 0, rows)
}

/// Even and odd excedance counts via
/// `P_{n,k} = k Q_{n-1,k} + (n-k) Q_{n-1,k-1} + P_{n-1,k}` and the mirrored
/// recurrence for `Q`, from `P_1 = (1)`, `Q_1 = (0)`.
pub fn pq_a(n_max: usize) -> PairTable {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut p = vec![ExactSeq::from_u64s(&[1])];
    let mut q = vec![ExactSeq::from_u64s(&[0])];
    for n in 2..=n_max as u64 {
        let (pp, qp) = (p.last().unwrap(), q.last().unwrap());
        let mix = |same: &ExactSeq, other: &ExactSeq, k: u64| {
            k * at(other, k, 0) + (n - k) * at(other, k, 1) + at(same, k, 0)
        };
        let pn: Vec<BigUint> = (0..n).map(|k| mix(pp, qp, k)).collect();
        let qn: Vec<BigUint> = (0..n).map(|k| mix(qp, pp, k)).collect();
        p.push(ExactSeq::new(pn).unwrap());
        q.push(ExactSeq::new(qn).unwrap());
    }
    PairTable {
        first: TriangularArray::from_rows(Some(FamilyId::PqA), 0, p),
        second: TriangularArray::from_rows(Some(FamilyId::PqA), 0, q),
    }
}

/// `B_{n,k} = (2k+1) B_{n-1,k} + (2(n-k)+1) B_{n-1,k-1}` from `B_1 = (1,1)`.
pub fn eulerian_b(n_max: usize) -> TriangularArray {
    let rows = grow(
        n_max,
        ExactSeq::from_u64s(&[1, 1]),
        |n| n + 1,
        |n, k, prev| (2 * k + 1) * at(prev, k, 0) + (2 * (n - k) + 1) * at(prev, k, 1),
    );
    TriangularArray::from_rows(Some(FamilyId::EulerB), 0, rows)
}

/// Plus and minus excedance counts via
/// `P^B_{n,k} = 2k Q^B_{n-1,k} + (2n-2k+1) Q^B_{n-1,k-1} + P^B_{n-1,k}` and the
/// mirrored recurrence, from `P^B_1 = (1,0)`, `Q^B_1 = (0,1)`.
pub fn pq_b(n_max: usize) -> PairTable {
    assert!(n_max >= 1, "n_max must be at least 1");
    let mut p = vec![ExactSeq::from_u64s(&[1, 0])];
    let mut q = vec![ExactSeq::from_u64s(&[0, 1])];
    for n in 2..=n_max as u64 {
        let (pp, qp) = (p.last().unwrap(), q.last().unwrap());
        let mix = |same: &ExactSeq, other: &ExactSeq, k: u64| {
            2 * k * at(other, k, 0) + (2 * n - 2 * k + 1) * at(other, k, 1) + at(same, k, 0)
        };
        let pn: Vec<BigUint> = (0..=n).map(|k| mix(pp, qp, k)).collect();
        let qn: Vec<BigUint> = (0..=n).map(|k| mix(qp, pp, k)).collect();
        p.push(ExactSeq::new(pn).unwrap());
        q.push(ExactSeq::new(qn).unwrap());
    }
    PairTable {
        first: TriangularArray::from_rows(Some(FamilyId::PqB), 0, p),
        second: TriangularArray::from_rows(Some(FamilyId::PqB), 0, q),
    }
}

/// `H_{n,k} = k H_{n-1,k} + (2n-k) H_{n-1,k-1}` for `k = 1..n`, from
/// `H_{1,1} = 1`. Entry `k` sits at offset `k - 1`.
pub fn second_order_eulerian(n_max: usize) -> TriangularArray {
    let rows = grow(
        n_max,
        ExactSeq::from_u64s(&[1]),
        |n| n,
        |n, idx, prev| {
            let k = idx + 1;
            // prev is stored with the same offset of 1
            k * at(prev, idx, 0) + (2 * n - k) * at(prev, idx, 1)
        },
    );
    TriangularArray::from_rows(Some(FamilyId::SecondOrderEuler), 1, rows)
}

/// `T_{n,k} = (k+1) T_{n-1,k} + (2n-4k) T_{n-1,k-1}` for `k = 0..⌊(n-1)/2⌋`.
pub fn gamma_a(n_max: usize) -> TriangularArray {
    let rows = grow(
        n_max,
        ExactSeq::from_u64s(&[1]),
        |n| FamilyId::GammaA.row_len(n),
        |n, k, prev| (k + 1) * at(prev, k, 0) + (2 * n - 4 * k) * at(prev, k, 1),
    );
    TriangularArray::from_rows(Some(FamilyId::GammaA), 0, rows)
}

/// `R_{n,k} = (2k+1) R_{n-1,k} + 4(n+1-2k) R_{n-1,k-1}` for `k = 0..⌊n/2⌋`.
pub fn gamma_b(n_max: usize) -> TriangularArray {
    let rows = grow(
        n_max,
        ExactSeq::from_u64s(&[1]),
        |n| FamilyId::GammaB.row_len(n),
        |n, k, prev| (2 * k + 1) * at(prev, k, 0) + 4 * (n + 1 - 2 * k) * at(prev, k, 1),
    );
    TriangularArray::from_rows(Some(FamilyId::GammaB), 0, rows)
}

pub fn family(id: FamilyId, n_max: usize) -> Family {
    match id {
        FamilyId::EulerA => Family::Single(eulerian_a(n_max)),
        FamilyId::PqA => Family::Pair(pq_a(n_max)),
        FamilyId::EulerB => Family::Single(eulerian_b(n_max)),
        FamilyId::PqB => Family::Pair(pq_b(n_max)),
        FamilyId::SecondOrderEuler => Family::Single(second_order_eulerian(n_max)),
        FamilyId::GammaA => Family::Single(gamma_a(n_max)),
        FamilyId::GammaB => Family::Single(gamma_b(n_max)),
    }
}

/// A computed family: one triangle or a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Single(TriangularArray),
    Pair(PairTable),
}

/// Expands `Σ_k γ_k t^k (1+t)^{degree-2k}` into ordinary coefficients
/// `0..=degree`.
pub fn gamma_expansion(gamma: &ExactSeq, degree: usize) -> ExactSeq {
    let mut out = vec![BigUint::zero(); degree + 1];
    for (k, g) in gamma.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let power = degree
            .checked_sub(2 * k)
            .expect("gamma index beyond degree / 2");
        for j in 0..=power {
            out[k + j] += g * binomial(BigUint::from(power), BigUint::from(j));
        }
    }
    ExactSeq::new(out).expect("degree + 1 entries")
}

/// `(-1)^k C(m, k)` for `k = 0..len`.
pub fn alternating_binomial_row(m: u64, len: usize) -> Vec<BigInt> {
    (0..len as u64)
        .map(|k| {
            let c = if k <= m {
                BigInt::from(binomial(BigUint::from(m), BigUint::from(k)))
            } else {
                BigInt::zero()
            };
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect()
}

fn signed(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

fn difference_ledger(pq: &PairTable, name: &str, binom_top: impl Fn(u64) -> u64) -> PropertyReport {
    let mut witnesses = Vec::new();
    for n in 1..=pq.n_max() {
        let (p, q) = (pq.first.row(n), pq.second.row(n));
        let expected = alternating_binomial_row(binom_top(n as u64), p.len());
        for (k, e) in expected.iter().enumerate() {
            if &(signed(&p[k]) - signed(&q[k])) != e {
                witnesses.push(vec![n, k]);
            }
        }
    }
    PropertyReport::from_witnesses(name, witnesses)
}

/// `P_{n,k} - Q_{n,k} = (-1)^k C(n-1, k)` on every computed row.
pub fn mantaci_identity_check(pq: &PairTable) -> PropertyReport {
    difference_ledger(pq, "P - Q = (-1)^k C(n-1,k)", |n| n - 1)
}

/// `P^B_{n,k} - Q^B_{n,k} = (-1)^k C(n, k)` on every computed row.
pub fn sivasubramanian_identity_check(pqb: &PairTable) -> PropertyReport {
    difference_ledger(pqb, "P^B - Q^B = (-1)^k C(n,k)", |n| n)
}

/// The nine terms `T_1..T_9` at `(n, k)` and the residual
/// `P_{n,k}^2 - P_{n,k+1}P_{n,k-1} - Σ T_i`, which is zero when the
/// expansion is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TiDecomposition {
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "decimal_terms")]
    pub terms: [BigInt; 9],
    #[serde(serialize_with = "decimal")]
    pub residual: BigInt,
}

fn decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn decimal_terms<S: serde::Serializer>(
    v: &[BigInt; 9],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|t| t.to_string()))
}

impl TiDecomposition {
    /// `T_i` with 1-based `i`.
    pub fn t(&self, i: usize) -> &BigInt {
        &self.terms[i - 1]
    }

    pub fn sum_of(&self, indices: &[usize]) -> BigInt {
        indices.iter().map(|&i| self.t(i)).sum()
    }
}

struct PrevRows<'a> {
    p: &'a ExactSeq,
    q: &'a ExactSeq,
}

impl PrevRows<'_> {
    fn p(&self, k: i64) -> BigInt {
        BigInt::from(self.p.get_or_zero(k))
    }

    fn q(&self, k: i64) -> BigInt {
        BigInt::from(self.q.get_or_zero(k))
    }
}

fn lhs_square_gap(row: &ExactSeq, k: i64) -> BigInt {
    let c = BigInt::from(row.get_or_zero(k));
    &c * &c - BigInt::from(row.get_or_zero(k + 1)) * BigInt::from(row.get_or_zero(k - 1))
}

fn check_ti_range(pq: &PairTable, n: usize, k: usize, k_max: usize, label: &str) -> Result<()> {
    if n < 2 || k < 1 || k > k_max || n > pq.n_max() {
        return Err(Error::IndexOutOfRange {
            n,
            k,
            range: format!("{label} with rows up to {}", pq.n_max()),
        });
    }
    Ok(())
}

/// Nine-term expansion for the even excedance counts, valid for
/// `1 <= k <= n-2`.
pub fn ti_decomposition_a(pq: &PairTable, n: usize, k: usize) -> Result<TiDecomposition> {
    check_ti_range(pq, n, k, n.saturating_sub(2), "1 <= k <= n-2")?;
    let prev = PrevRows {
        p: pq.first.row(n - 1),
        q: pq.second.row(n - 1),
    };
    let (ni, ki) = (n as i64, k as i64);
    let (nb, kb) = (BigInt::from(ni), BigInt::from(ki));
    let one = BigInt::from(1);
    let (p, q) = (|j| prev.p(j), |j| prev.q(j));
    let nk = &nb - &kb;

    let terms = [
        (&kb * &kb - &one) * (q(ki) * q(ki) - q(ki + 1) * q(ki - 1)),
        q(ki) * q(ki) + q(ki - 1) * q(ki - 1) - 2 * q(ki - 1) * q(ki),
        (&nk * &nk - &one) * (q(ki - 1) * q(ki - 1) - q(ki) * q(ki - 2)),
        p(ki) * p(ki) - p(ki + 1) * p(ki - 1),
        (&kb + &one) * (&nk + &one) * (q(ki) * q(ki - 1) - q(ki + 1) * q(ki - 2)),
        (&kb - &one) * (&nk - &one) * (q(ki - 1) * q(ki) - q(ki - 1) * q(ki)),
        (&nk - &one) * (q(ki - 1) * p(ki) - q(ki) * p(ki - 1)),
        (&nk + &one) * (q(ki - 1) * p(ki) - q(ki - 2) * p(ki + 1)),
        2 * &kb * q(ki) * p(ki)
            - (&kb + &one) * q(ki + 1) * p(ki - 1)
            - (&kb - &one) * q(ki - 1) * p(ki + 1),
    ];
    let residual = lhs_square_gap(pq.first.row(n), ki) - terms.iter().sum::<BigInt>();
    Ok(TiDecomposition {
        n,
        k,
        terms,
        residual,
    })
}

/// Nine-term expansion for the plus-class excedance counts, valid for
/// `1 <= k <= n-1`.
pub fn ti_decomposition_b(pqb: &PairTable, n: usize, k: usize) -> Result<TiDecomposition> {
    check_ti_range(pqb, n, k, n.saturating_sub(1), "1 <= k <= n-1")?;
    let prev = PrevRows {
        p: pqb.first.row(n - 1),
        q: pqb.second.row(n - 1),
    };
    let ki = k as i64;
    let kb = BigInt::from(ki);
    let one = BigInt::from(1);
    let (p, q) = (|j| prev.p(j), |j| prev.q(j));
    // 2n - 2k
    let m = BigInt::from(2 * (n as i64 - ki));

    let terms = [
        4 * (&kb * &kb - &one) * (q(ki) * q(ki) - q(ki + 1) * q(ki - 1)),
        4 * q(ki) * q(ki) + 4 * q(ki - 1) * q(ki - 1) - 8 * q(ki - 1) * q(ki),
        ((&m + 1) * (&m + 1) - 4) * (q(ki - 1) * q(ki - 1) - q(ki) * q(ki - 2)),
        p(ki) * p(ki) - p(ki + 1) * p(ki - 1),
        2 * (&kb + &one) * (&m + 3) * (q(ki) * q(ki - 1) - q(ki + 1) * q(ki - 2)),
        2 * (&kb - &one) * (&m - 1) * (q(ki - 1) * q(ki) - q(ki - 1) * q(ki)),
        (&m - 1) * (q(ki - 1) * p(ki) - q(ki) * p(ki - 1)),
        (&m + 3) * (q(ki - 1) * p(ki) - q(ki - 2) * p(ki + 1)),
        4 * &kb * q(ki) * p(ki)
            - 2 * (&kb + &one) * q(ki + 1) * p(ki - 1)
            - 2 * (&kb - &one) * q(ki - 1) * p(ki + 1),
    ];
    let residual = lhs_square_gap(pqb.first.row(n), ki) - terms.iter().sum::<BigInt>();
    Ok(TiDecomposition {
        n,
        k,
        terms,
        residual,
    })
}

/// Witness tags used by [`ti_audit`].
pub mod ti_failure {
    pub const NONZERO_RESIDUAL: usize = 0;
    pub const T2_NEGATIVE: usize = 2;
    /// `T_1 + T_5 + T_7 < 0` at an odd `k` with `3 <= k <= n-2`.
    pub const T157_NEGATIVE: usize = 157;
    /// `T_4 + T_6 + T_8 + T_9 < 0` at an odd `k` with `3 <= k <= n-2`.
    pub const T4689_NEGATIVE: usize = 4689;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoxeterType {
    A,
    B,
}

/// Checks every valid `(n, k)` with `n <= pq.n_max()`: zero residual,
/// `T_2 >= 0`, and for odd `k` in `3..=n-2` the two grouped sums used in the
/// induction step. Witnesses are `[n, k, tag]` with tags from [`ti_failure`].
pub fn ti_audit(pq: &PairTable, kind: CoxeterType) -> PropertyReport {
    let mut witnesses = Vec::new();
    let mut points = 0usize;
    for n in 2..=pq.n_max() {
        let k_max = match kind {
            CoxeterType::A => n.saturating_sub(2),
            CoxeterType::B => n - 1,
        };
        for k in 1..=k_max {
            let d = match kind {
                CoxeterType::A => ti_decomposition_a(pq, n, k),
                CoxeterType::B => ti_decomposition_b(pq, n, k),
            }
            .expect("index within range");
            points += 1;
            if !d.residual.is_zero() {
                witnesses.push(vec![n, k, ti_failure::NONZERO_RESIDUAL]);
            }
            if d.t(2).is_negative() {
                witnesses.push(vec![n, k, ti_failure::T2_NEGATIVE]);
            }
            if k % 2 == 1 && k >= 3 && k + 2 <= n {
                if d.sum_of(&[1, 5, 7]).is_negative() {
                    witnesses.push(vec![n, k, ti_failure::T157_NEGATIVE]);
                }
                if d.sum_of(&[4, 6, 8, 9]).is_negative() {
                    witnesses.push(vec![n, k, ti_failure::T4689_NEGATIVE]);
                }
            }
        }
    }
    let label = match kind {
        CoxeterType::A => "nine-term expansion (type A)",
        CoxeterType::B => "nine-term expansion (type B)",
    };
    PropertyReport::from_witnesses(label, witnesses)
        .with_note(format!("{points} (n,k) points checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u64]) -> ExactSeq {
        ExactSeq::from_u64s(v)
    }

    #[test]
    fn eulerian_rows() {
        let a = eulerian_a(6);
        assert_eq!(a.row(1), &s(&[1]));
        assert_eq!(a.row(6), &s(&[1, 57, 302, 302, 57, 1]));
        for n in 3..=6 {
            assert!(a.entry(n, 1) >= BigUint::from(n as u64 + 1));
        }
    }

    #[test]
    fn pq_rows() {
        let pq = pq_a(6);
        assert_eq!(pq.first.row(5), &s(&[1, 11, 36, 11, 1]));
        assert_eq!(pq.second.row(5), &s(&[0, 15, 30, 15, 0]));
        for n in 1..=6 {
            assert_eq!(pq.first.entry(n, 0), BigUint::from(1u32));
            assert_eq!(pq.second.entry(n, 0), BigUint::zero());
        }
        assert!(mantaci_identity_check(&pq).verdict);
    }

    #[test]
    fn type_b_rows() {
        let b = eulerian_b(3);
        assert_eq!(b.row(1), &s(&[1, 1]));
        assert_eq!(b.row(2), &s(&[1, 6, 1]));
        assert_eq!(b.row(3), &s(&[1, 23, 23, 1]));
        let pqb = pq_b(3);
        assert_eq!(pqb.first.row(1), &s(&[1, 0]));
        assert_eq!(pqb.second.row(1), &s(&[0, 1]));
        assert_eq!(pqb.first.row(2), &s(&[1, 2, 1]));
        assert_eq!(pqb.second.row(2), &s(&[0, 4, 0]));
        assert!(sivasubramanian_identity_check(&pqb).verdict);
    }

    #[test]
    fn second_order_rows() {
        let h = second_order_eulerian(4);
        assert_eq!(h.k_offset, 1);
        assert_eq!(h.row(1), &s(&[1]));
        assert_eq!(h.row(2), &s(&[1, 2]));
        assert_eq!(h.row(3), &s(&[1, 8, 6]));
        assert_eq!(h.entry(3, 2), BigUint::from(8u32));
        assert_eq!(h.entry(3, 0), BigUint::zero());
    }

    #[test]
    fn gamma_rows() {
        let t = gamma_a(4);
        assert_eq!(t.row(1), &s(&[1]));
        assert_eq!(t.row(3), &s(&[1, 2]));
        assert_eq!(t.row(4), &s(&[1, 8]));
        let r = gamma_b(3);
        assert_eq!(r.row(1), &s(&[1]));
        assert_eq!(r.row(2), &s(&[1, 4]));
        assert_eq!(r.row(3), &s(&[1, 20]));
        assert_eq!(gamma_expansion(r.row(2), 2), s(&[1, 6, 1]));
        assert_eq!(gamma_expansion(t.row(3), 2), s(&[1, 4, 1]));
    }

    #[test]
    fn alternating_binomials() {
        let row = alternating_binomial_row(4, 6);
        let expect: Vec<BigInt> = [1, -4, 6, -4, 1, 0]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(row, expect);
    }

    #[test]
    fn ti_examples() {
        let pq = pq_a(8);
        assert!(ti_decomposition_a(&pq, 5, 2).unwrap().residual.is_zero());
        assert!(ti_decomposition_a(&pq, 4, 1).unwrap().t(6).is_zero());
        assert!(!ti_decomposition_a(&pq, 7, 3).unwrap().t(2).is_negative());

        let pqb = pq_b(5);
        assert!(ti_decomposition_b(&pqb, 4, 2).unwrap().residual.is_zero());
        let d = ti_decomposition_b(&pqb, 5, 3).unwrap();
        assert!(d.t(6).is_zero());
        assert!(!d.t(2).is_negative());
    }

    #[test]
    fn ti_ranges() {
        let pq = pq_a(6);
        assert!(ti_decomposition_a(&pq, 5, 0).is_err());
        assert!(ti_decomposition_a(&pq, 5, 4).is_err());
        assert!(ti_decomposition_a(&pq, 7, 2).is_err());
        let pqb = pq_b(6);
        assert!(ti_decomposition_b(&pqb, 5, 4).is_ok());
        assert!(ti_decomposition_b(&pqb, 5, 5).is_err());
    }

    #[test]
    fn audits_small() {
        assert!(ti_audit(&pq_a(15), CoxeterType::A).verdict);
        assert!(ti_audit(&pq_b(15), CoxeterType::B).verdict);
    }

    #[test]
    fn family_names() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>(), Ok(f));
        }
        assert!("eulerC".parse::<FamilyId>().is_err());
    }
}
