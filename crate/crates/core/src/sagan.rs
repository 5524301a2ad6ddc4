//! Row log-concavity certificates for triangular recurrences
//! `t_{n,k} = c_{n,k} t_{n-1,k-1} + d_{n,k} t_{n-1,k}` with affine integer
//! coefficients.
//!
//! Two sufficient conditions are checked pointwise in exact integers:
//!
//! * the classical one, `c_{k-1}d_{k+1} + c_{k+1}d_{k-1} <= 2 c_k d_k`;
//! * the modified one,
//!   `2 sqrt((c_k^2 - c_{k+1}c_{k-1})(d_k^2 - d_{k+1}d_{k-1})) >= c_{k-1}d_{k+1} + c_{k+1}d_{k-1} - 2 c_k d_k`,
//!   decided by squaring once the right side is known to be positive.
//!
//! Both also require `c` and `d` to be non-negative and log-concave in `k`.
//! Rules are plain TOML; the five classical applications ship as presets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::properties::PropertyReport;
use crate::recurrence::{FamilyId, TriangularArray};
use crate::seq::ExactSeq;

/// `alpha * k + beta * n + gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Affine {
    pub k: i64,
    pub n: i64,
    pub constant: i64,
}

impl Affine {
    pub const fn new(k: i64, n: i64, constant: i64) -> Self {
        Affine { k, n, constant }
    }

    pub fn eval(&self, n: i64, k: i64) -> BigInt {
        BigInt::from(self.k) * k + BigInt::from(self.n) * n + self.constant
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (coef, var) in [(self.n, "n"), (self.k, "k")] {
            match coef {
                0 => {}
                1 => parts.push(var.to_string()),
                -1 => parts.push(format!("-{var}")),
                c => parts.push(format!("{c}{var}")),
            }
        }
        if self.constant != 0 || parts.is_empty() {
            parts.push(self.constant.to_string());
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            match p.strip_prefix('-') {
                Some(rest) => s.push_str(&format!(" - {rest}")),
                None => s.push_str(&format!(" + {p}")),
            }
        }
        f.write_str(&s)
    }
}

/// Which previous-row term `c` multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pairing {
    /// `t_{n,k} = c t_{n-1,k-1} + d t_{n-1,k}`.
    CShifted,
    /// `t_{n,k} = c t_{n-1,k} + d t_{n-1,k-1}`.
    CUnshifted,
}

/// Upper end of row `N`'s k range: `floor((n * N + offset) / div)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KBound {
    pub n: i64,
    pub offset: i64,
    pub div: i64,
}

impl KBound {
    pub fn at(&self, n: usize) -> i64 {
        (self.n * n as i64 + self.offset).div_euclid(self.div)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffRule {
    pub name: String,
    /// The family the rule is meant to reproduce, if any.
    pub family: Option<FamilyId>,
    pub c: Affine,
    pub d: Affine,
    pub pairing: Pairing,
    /// Row 1, starting at `k = k_min`.
    pub initial_row: ExactSeq,
    pub k_min: usize,
    pub k_max: KBound,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleFile {
    name: String,
    #[serde(default)]
    family: Option<String>,
    #[serde(default = "default_pairing")]
    pairing: Pairing,
    initial_row: Vec<Entry>,
    #[serde(default)]
    k_min: usize,
    c: Affine,
    d: Affine,
    k_max: KBound,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(u64),
    Text(String),
}

fn default_pairing() -> Pairing {
    Pairing::CShifted
}

const PRESET_SOURCES: [(&str, &str); 5] = [
    ("eulerA", include_str!("../presets/eulerA.toml")),
    ("eulerB", include_str!("../presets/eulerB.toml")),
    (
        "secondOrderEuler",
        include_str!("../presets/secondOrderEuler.toml"),
    ),
    ("gammaA", include_str!("../presets/gammaA.toml")),
    ("gammaB", include_str!("../presets/gammaB.toml")),
];

pub const PRESET_NAMES: [&str; 5] = ["eulerA", "eulerB", "secondOrderEuler", "gammaA", "gammaB"];

impl CoeffRule {
    pub fn new(
        name: impl Into<String>,
        c: Affine,
        d: Affine,
        pairing: Pairing,
        initial_row: ExactSeq,
        k_min: usize,
        k_max: KBound,
    ) -> Result<Self> {
        let rule = CoeffRule {
            name: name.into(),
            family: None,
            c,
            d,
            pairing,
            initial_row,
            k_min,
            k_max,
        };
        rule.validate()?;
        Ok(rule)
    }

    fn validate(&self) -> Result<()> {
        if self.k_max.div <= 0 {
            return Err(Error::RuleParse(format!(
                "k_max.div must be positive, got {}",
                self.k_max.div
            )));
        }
        let expected = self.row_len(1);
        if expected != Some(self.initial_row.len()) {
            return Err(Error::RuleParse(format!(
                "initial_row has {} entries but the k range of row 1 is {}..={}",
                self.initial_row.len(),
                self.k_min,
                self.k_max.at(1)
            )));
        }
        Ok(())
    }

    /// Parses a rule file.
    pub fn from_toml_str(src: &str) -> Result<Self> {
        let raw: RuleFile = toml::from_str(src).map_err(|e| Error::RuleParse(e.to_string()))?;
        let family = raw
            .family
            .map(|f| f.parse::<FamilyId>())
            .transpose()
            .map_err(|e| Error::RuleParse(e.to_string()))?;
        let mut row = Vec::with_capacity(raw.initial_row.len());
        for e in raw.initial_row {
            row.push(match e {
                Entry::Int(v) => BigUint::from(v),
                Entry::Text(s) => s.trim().parse::<BigUint>().map_err(|_| {
                    Error::RuleParse(format!(
                        "initial_row entry `{s}` is not a non-negative integer"
                    ))
                })?,
            });
        }
        let initial_row =
            ExactSeq::new(row).map_err(|_| Error::RuleParse("initial_row is empty".into()))?;
        let mut rule = CoeffRule::new(
            raw.name,
            raw.c,
            raw.d,
            raw.pairing,
            initial_row,
            raw.k_min,
            raw.k_max,
        )?;
        rule.family = family;
        Ok(rule)
    }

    pub fn preset(name: &str) -> Result<Self> {
        let (_, src) = PRESET_SOURCES
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::Unknown {
                kind: "preset",
                name: name.to_string(),
            })?;
        CoeffRule::from_toml_str(src)
    }

    pub fn presets() -> Vec<Self> {
        PRESET_NAMES
            .iter()
            .map(|n| CoeffRule::preset(n).expect("bundled presets parse"))
            .collect()
    }

    /// Number of entries in row `n`, or `None` if the range is empty.
    pub fn row_len(&self, n: usize) -> Option<usize> {
        let hi = self.k_max.at(n);
        let lo = self.k_min as i64;
        (hi >= lo).then(|| (hi - lo + 1) as usize)
    }

    /// `(c, d)` as the classical recurrence sees them: the first value
    /// multiplies `t_{n-1,k-1}`.
    fn shifted_unshifted(&self) -> (Affine, Affine) {
        match self.pairing {
            Pairing::CShifted => (self.c, self.d),
            Pairing::CUnshifted => (self.d, self.c),
        }
    }

    fn k_range(&self, n: usize) -> std::ops::RangeInclusive<i64> {
        self.k_min as i64..=self.k_max.at(n)
    }
}

impl FromStr for CoeffRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CoeffRule::from_toml_str(s)
    }
}

/// Rows `1..=n_max` generated by the rule.
pub fn build_triangle(rule: &CoeffRule, n_max: usize) -> Result<TriangularArray> {
    assert!(n_max >= 1, "n_max must be at least 1");
    let lo = rule.k_min as i64;
    let mut rows = vec![rule.initial_row.clone()];
    for n in 2..=n_max {
        if rule.row_len(n).is_none() {
            return Err(Error::RuleParse(format!("row {n} has an empty k range")));
        }
        let prev = rows.last().expect("non-empty");
        let mut row = Vec::new();
        for k in rule.k_range(n) {
            let c = rule.c.eval(n as i64, k);
            let d = rule.d.eval(n as i64, k);
            for (coef, label) in [(&c, "c"), (&d, "d")] {
                if coef.is_negative() {
                    return Err(Error::RuleViolation {
                        rule: rule.name.clone(),
                        coefficient: label,
                        value: i64::try_from(coef).unwrap_or(i64::MIN),
                        n,
                        k,
                    });
                }
            }
            let (shifted, unshifted) = match rule.pairing {
                Pairing::CShifted => (c, d),
                Pairing::CUnshifted => (d, c),
            };
            let a = shifted.magnitude() * prev.get_or_zero(k - 1 - lo);
            let b = unshifted.magnitude() * prev.get_or_zero(k - lo);
            row.push(a + b);
        }
        rows.push(ExactSeq::new(row).expect("row range checked above"));
    }
    Ok(TriangularArray::from_rows(rule.family, rule.k_min, rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Condition {
    Sagan,
    ModifiedSagan,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::Sagan => "sagan",
            Condition::ModifiedSagan => "modifiedSagan",
        })
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "sagan" | "original" => Ok(Condition::Sagan),
            "modified" | "modifiedsagan" => Ok(Condition::ModifiedSagan),
            _ => Err(Error::Unknown {
                kind: "condition",
                name: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    NegativeCoefficient,
    CNotLogConcave,
    DNotLogConcave,
    ConditionTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub k: i64,
    pub kind: FailureKind,
    pub detail: String,
}

/// First point at which a given rendering of condition (ii) was seen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sample {
    pub n: usize,
    pub k: i64,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rule_name: String,
    pub condition: Condition,
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
    pub n_max_checked: usize,
    /// True when every quantity deciding conditions (i) and (ii) took the
    /// same value at every checked point.
    pub uniform: bool,
    pub samples: Vec<Sample>,
}

impl Certificate {
    pub fn witness_points(&self) -> Vec<(usize, i64)> {
        self.witnesses.iter().map(|w| (w.n, w.k)).collect()
    }

    pub fn sample_displays(&self) -> Vec<&str> {
        self.samples.iter().map(|s| s.display.as_str()).collect()
    }
}

const MAX_SAMPLES: usize = 8;

/// Exact quantities at one point, with `c` multiplying the shifted term.
struct Point {
    c: [BigInt; 3],
    d: [BigInt; 3],
}

impl Point {
    fn at(rule: &CoeffRule, n: usize, k: i64) -> Self {
        let (c, d) = rule.shifted_unshifted();
        let n = n as i64;
        Point {
            c: [c.eval(n, k - 1), c.eval(n, k), c.eval(n, k + 1)],
            d: [d.eval(n, k - 1), d.eval(n, k), d.eval(n, k + 1)],
        }
    }

    fn c_lc(&self) -> BigInt {
        &self.c[1] * &self.c[1] - &self.c[0] * &self.c[2]
    }

    fn d_lc(&self) -> BigInt {
        &self.d[1] * &self.d[1] - &self.d[0] * &self.d[2]
    }

    /// `c_{k-1}d_{k+1} + c_{k+1}d_{k-1}`.
    fn cross(&self) -> BigInt {
        &self.c[0] * &self.d[2] + &self.c[2] * &self.d[0]
    }

    fn twice_cd(&self) -> BigInt {
        BigInt::from(2) * &self.c[1] * &self.d[1]
    }

    fn sagan(&self) -> (bool, String) {
        let (lhs, rhs) = (self.cross(), self.twice_cd());
        let ok = lhs <= rhs;
        (ok, format!("{lhs} {} {rhs}", if ok { "≤" } else { ">" }))
    }

    fn modified(&self) -> (bool, String) {
        let (x, y) = (self.c_lc(), self.d_lc());
        let rhs = self.cross() - self.twice_cd();
        let lhs = render_two_sqrt(&x, &y);
        let ok = modified_holds(&x, &y, &rhs);
        (ok, format!("{lhs} {} {rhs}", if ok { "≥" } else { "<" }))
    }
}

/// Decides `2 sqrt(x y) >= rhs` exactly. Undefined radicands fail.
pub fn modified_holds(x: &BigInt, y: &BigInt, rhs: &BigInt) -> bool {
    if x.is_negative() || y.is_negative() {
        return false;
    }
    if !rhs.is_positive() {
        return true;
    }
    BigInt::from(4) * x * y >= rhs * rhs
}

fn render_two_sqrt(x: &BigInt, y: &BigInt) -> String {
    let p = x * y;
    if p.is_negative() {
        return format!("2√({p})");
    }
    let r: BigInt = Roots::sqrt(&p);
    if &r * &r == p {
        (r * BigInt::from(2)).to_string()
    } else {
        format!("2√{p}")
    }
}

fn points(rule: &CoeffRule, n_max: usize) -> Vec<(usize, i64)> {
    (1..=n_max)
        .flat_map(|n| rule.k_range(n).map(move |k| (n, k)))
        .collect()
}

type PointResult = (Vec<Witness>, (bool, String), Vec<BigInt>);

fn check_point(rule: &CoeffRule, condition: Condition, n: usize, k: i64) -> PointResult {
    let p = Point::at(rule, n, k);
    let mut ws = Vec::new();
    let mut push = |kind, detail: String| ws.push(Witness { n, k, kind, detail });
    let (c, d) = (rule.c.eval(n as i64, k), rule.d.eval(n as i64, k));
    if c.is_negative() || d.is_negative() {
        push(
            FailureKind::NegativeCoefficient,
            format!("c = {c}, d = {d}"),
        );
    }
    let (cx, dx) = (p.c_lc(), p.d_lc());
    if cx.is_negative() {
        push(
            FailureKind::CNotLogConcave,
            format!("c_k^2 - c_(k+1) c_(k-1) = {cx}"),
        );
    }
    if dx.is_negative() {
        push(
            FailureKind::DNotLogConcave,
            format!("d_k^2 - d_(k+1) d_(k-1) = {dx}"),
        );
    }
    let (ok, display) = match condition {
        Condition::Sagan => p.sagan(),
        Condition::ModifiedSagan => p.modified(),
    };
    if !ok {
        push(FailureKind::ConditionTwo, display.clone());
    }
    let key = match condition {
        Condition::Sagan => vec![cx, dx, p.twice_cd() - p.cross()],
        Condition::ModifiedSagan => vec![cx.clone(), dx.clone(), p.cross() - p.twice_cd()],
    };
    (ws, (ok, display), key)
}

fn certify(rule: &CoeffRule, condition: Condition, n_max: usize) -> Certificate {
    assert!(n_max >= 1, "n_max must be at least 1");
    let pts = points(rule, n_max);
    let results: Vec<PointResult> = pts
        .par_iter()
        .map(|&(n, k)| check_point(rule, condition, n, k))
        .collect();

    let mut witnesses = Vec::new();
    let mut samples: Vec<Sample> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut keys = BTreeSet::new();
    for (&(n, k), (ws, (_, display), key)) in pts.iter().zip(results) {
        witnesses.extend(ws);
        if samples.len() < MAX_SAMPLES && seen.insert(display.clone()) {
            samples.push(Sample { n, k, display });
        }
        keys.insert(key);
    }
    let verdict = witnesses.is_empty();
    Certificate {
        rule_name: rule.name.clone(),
        condition,
        verdict,
        witnesses,
        n_max_checked: n_max,
        uniform: verdict && keys.len() == 1,
        samples,
    }
}

/// Classical condition over every point `1 <= n <= n_max`, `k` in row `n`'s range.
pub fn certify_sagan(rule: &CoeffRule, n_max: usize) -> Certificate {
    certify(rule, Condition::Sagan, n_max)
}

/// Modified condition over the same points as [`certify_sagan`].
pub fn certify_modified_sagan(rule: &CoeffRule, n_max: usize) -> Certificate {
    certify(rule, Condition::ModifiedSagan, n_max)
}

pub fn certify_with(rule: &CoeffRule, condition: Condition, n_max: usize) -> Certificate {
    certify(rule, condition, n_max)
}

/// At every point where the classical condition (ii) holds and both
/// coefficient rows are log-concave, checks that the modified condition (ii)
/// holds as well. Witnesses are `[n, k]`.
pub fn sagan_implies_modified(rule: &CoeffRule, n_max: usize) -> PropertyReport {
    let mut antecedent = 0usize;
    let mut witnesses = Vec::new();
    for (n, k) in points(rule, n_max) {
        let p = Point::at(rule, n, k);
        let (x, y) = (p.c_lc(), p.d_lc());
        if x.is_negative() || y.is_negative() || !p.sagan().0 {
            continue;
        }
        antecedent += 1;
        if !p.modified().0 {
            witnesses.push(vec![n, k as usize]);
        }
    }
    PropertyReport::from_witnesses("sagan-implies-modified", witnesses)
        .with_note(format!("classical condition held at {antecedent} points"))
}

/// `c_k^2 - c_{k+1}c_{k-1}`, `d_k^2 - d_{k+1}d_{k-1}` and the right side of
/// the modified condition at one point, for callers that want the raw numbers.
pub fn modified_terms(rule: &CoeffRule, n: usize, k: i64) -> (BigInt, BigInt, BigInt) {
    let p = Point::at(rule, n, k);
    (p.c_lc(), p.d_lc(), p.cross() - p.twice_cd())
}

/// Left and right sides of the classical condition at one point.
pub fn sagan_terms(rule: &CoeffRule, n: usize, k: i64) -> (BigInt, BigInt) {
    let p = Point::at(rule, n, k);
    (p.cross(), p.twice_cd())
}
