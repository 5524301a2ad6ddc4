//! Command-line front end: `table`, `verify`, `conjecture`, `certify`.
//!
//! Exit codes: 0 pass, 1 property or certification failure, 2 usage or
//! parse error, 3 enumeration guard or exhaustive-scan cap rejection.
//! Data goes to stdout, diagnostics to stderr.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumerate::{
    distribution_a_with, distribution_b_with, equidistribution_check_with, ClassFilterA,
    ClassFilterB, EnumerationLimits,
};
use crate::error::{Error, Result};
use crate::permstat::{Group, Statistic};
use crate::properties::{
    is_log_concave, is_ratio_alternating, is_strongly_synchronised, is_synchronised, is_unimodal,
    mixed_sequence_cross_check, ratio_parity_check, ratio_pattern, s_family_all_log_concave,
    PropertyReport, RatioPattern, DEFAULT_EXHAUSTIVE_CAP,
};
use crate::recurrence::{
    eulerian_a, eulerian_b, family, mantaci_identity_check, pq_a, pq_b,
    sivasubramanian_identity_check, ti_audit, CoxeterType, Family, FamilyId, PairTable,
    TriangularArray,
};
use crate::sagan::{build_triangle, certify_with, Certificate, CoeffRule, Condition};
use crate::seq::ExactSeq;

/// Environment variable that raises the brute-force enumeration ceiling.
pub const MAX_ENUM_N_ENV: &str = "STRONGSYNC_MAX_ENUM_N";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

const EVIDENCE_LABEL: &str = "evidence, not proof";

#[derive(Parser, Debug)]
#[command(
    name = "strongsync",
    version,
    about = "Exact excedance and descent statistics, log-concavity and strong synchronisation checks"
)]
struct Cli {
    /// Omit the timing field so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Lift the brute-force enumeration ceiling to the counter limits.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a family triangle or an enumerated statistic distribution.
    Table(TableArgs),
    /// Run a named check up to --max-n.
    Verify(VerifyArgs),
    /// Search for counterexamples to an open conjecture.
    Conjecture(ConjectureArgs),
    /// Certify a coefficient rule for row log-concavity.
    Certify(CertifyArgs),
}

#[derive(clap::Args, Debug)]
struct TableArgs {
    /// Family (eulerA, pqA, eulerB, pqB, secondOrderEuler, gammaA, gammaB) or statistic (exc, des, excB, ...).
    target: String,
    /// Class filter for statistics: all, even, odd, derangement (type A); all, plus, minus (type B).
    #[arg(long)]
    class: Option<String>,
    #[arg(long)]
    n: usize,
    /// Emit rows 1..=n instead of row n only.
    #[arg(long)]
    all_rows: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    target: String,
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    C61,
    C62,
}

#[derive(clap::Args, Debug)]
struct ConjectureArgs {
    #[arg(value_enum)]
    which: Which,
    #[arg(long = "max-n", default_value_t = 9)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(clap::Args, Debug)]
struct CertifyArgs {
    #[arg(long, conflicts_with = "rule", required_unless_present = "rule")]
    preset: Option<String>,
    /// Path to a TOML rule file.
    #[arg(long)]
    rule: Option<PathBuf>,
    /// sagan or modified.
    #[arg(long, default_value = "modified")]
    condition: String,
    #[arg(long = "max-n", default_value_t = 20)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    params: BTreeMap<String, Value>,
    results: Vec<ResultEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    integers_as: &'static str,
    version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u64>,
}

#[derive(Serialize)]
struct ResultEntry {
    target: String,
    n: usize,
    verdict: bool,
    witnesses: Vec<[i64; 2]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

impl ResultEntry {
    fn new(target: impl Into<String>, n: usize, witnesses: Vec<[i64; 2]>) -> Self {
        ResultEntry {
            target: target.into(),
            n,
            verdict: witnesses.is_empty(),
            witnesses,
            notes: Vec::new(),
        }
    }

    /// Report whose witnesses start with `k`, for row `n`.
    fn row(target: impl Into<String>, n: usize, report: &PropertyReport) -> Self {
        let w = report
            .witnesses
            .iter()
            .map(|w| [n as i64, w[0] as i64])
            .collect();
        ResultEntry::new(target, n, w).notes(&report.notes)
    }

    /// Report whose witnesses start with `[n, k]`.
    fn table(target: impl Into<String>, n: usize, report: &PropertyReport) -> Self {
        let w = report
            .witnesses
            .iter()
            .map(|w| [w[0] as i64, w[1] as i64])
            .collect();
        ResultEntry::new(target, n, w).notes(&report.notes)
    }

    fn notes(mut self, notes: &[String]) -> Self {
        self.notes.extend(notes.iter().cloned());
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Parses `args` (program name first) and runs the command, reading the
/// guard override from the environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(MAX_ENUM_N_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// As [`run`], with the guard override passed explicitly.
pub fn run_with_env<I, T>(
    args: I,
    max_enum_n: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_PASS
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let limits = if cli.allow_large {
        EnumerationLimits::overridden()
    } else {
        match max_enum_n {
            None => EnumerationLimits::default(),
            Some(v) => match v.trim().parse::<usize>() {
                Ok(n) => EnumerationLimits {
                    max_n_a: n,
                    max_n_b: n,
                },
                Err(_) => {
                    let _ = writeln!(
                        err,
                        "error: {MAX_ENUM_N_ENV} must be a non-negative integer, got `{v}`"
                    );
                    return EXIT_USAGE;
                }
            },
        }
    };
    let ctx = Ctx {
        limits,
        timing: !cli.no_timing,
        started: Instant::now(),
    };
    let outcome = match cli.command {
        Command::Table(a) => cmd_table(&a, &ctx),
        Command::Verify(a) => cmd_verify(&a, &ctx),
        Command::Conjecture(a) => cmd_conjecture(&a, &ctx),
        Command::Certify(a) => cmd_certify(&a, &ctx),
    };
    match outcome {
        Ok(Output {
            stdout,
            stderr,
            code,
        }) => {
            let _ = out.write_all(stdout.as_bytes());
            let _ = err.write_all(stderr.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeLimit { .. } | Error::CapExceeded { .. } => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

struct Ctx {
    limits: EnumerationLimits,
    timing: bool,
    started: Instant,
}

struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::NotApplicable(msg.into())
}

// ---------------------------------------------------------------- table

struct Block {
    name: String,
    k_offset: usize,
    rows: Vec<(usize, ExactSeq)>,
}

fn cmd_table(a: &TableArgs, ctx: &Ctx) -> Result<Output> {
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let first = if a.all_rows { 1 } else { a.n };
    let blocks = if let Ok(id) = a.target.parse::<FamilyId>() {
        if a.class.is_some() {
            return Err(usage("--class applies to statistics, not families"));
        }
        let pick = |name: &str, t: &TriangularArray| Block {
            name: name.to_string(),
            k_offset: t.k_offset,
            rows: (first..=a.n).map(|n| (n, t.row(n).clone())).collect(),
        };
        match family(id, a.n) {
            Family::Single(t) => vec![pick(id.name(), &t)],
            Family::Pair(p) => {
                let (x, y) = if id == FamilyId::PqB {
                    ("PB", "QB")
                } else {
                    ("P", "Q")
                };
                vec![pick(x, &p.first), pick(y, &p.second)]
            }
        }
    } else {
        let stat: Statistic = a.target.parse().map_err(|_| Error::Unknown {
            kind: "family or statistic",
            name: a.target.clone(),
        })?;
        let class = a.class.as_deref().unwrap_or("all");
        ctx.limits.check(stat.group(), a.n)?;
        let mut rows = Vec::new();
        for n in first..=a.n {
            let row = match stat.group() {
                Group::TypeA => {
                    distribution_a_with(n, stat, class.parse::<ClassFilterA>()?, &ctx.limits)?
                }
                Group::TypeB => {
                    distribution_b_with(n, stat, class.parse::<ClassFilterB>()?, &ctx.limits)?
                }
            };
            rows.push((n, row));
        }
        vec![Block {
            name: format!("{}:{}", stat.name(), class.to_ascii_lowercase()),
            k_offset: 0,
            rows,
        }]
    };

    let stdout = match a.format {
        TableFormat::Csv => {
            let mut s = String::new();
            let labelled = blocks.len() > 1;
            for b in &blocks {
                if labelled {
                    let _ = writeln!(s, "# {}", b.name);
                }
                s.push_str("n,k,value\n");
                for (n, row) in &b.rows {
                    for (i, v) in row.iter().enumerate() {
                        let _ = writeln!(s, "{},{},{}", n, b.k_offset + i, v);
                    }
                }
            }
            s
        }
        TableFormat::Json => {
            let tables: Vec<Value> = blocks
                .iter()
                .map(|b| {
                    json!({
                        "name": b.name,
                        "rows": b.rows.iter().map(|(n, row)| json!({
                            "n": n,
                            "k_start": b.k_offset,
                            "values": row.to_decimal_strings(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "command": "table",
                "params": {
                    "target": a.target,
                    "class": a.class,
                    "n": a.n,
                    "all_rows": a.all_rows,
                },
                "tables": tables,
                "integers_as": "decimal-strings",
                "version": env!("CARGO_PKG_VERSION"),
            });
            to_json(&doc)
        }
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code: EXIT_PASS,
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialises");
    s.push('\n');
    s
}

// ---------------------------------------------------------------- verify

/// Verify targets, their aliases and default `--max-n`.
pub const VERIFY_TARGETS: [(&str, &[&str], usize); 16] = [
    ("thm-1.5", &["strong-sync-A"], 50),
    ("thm-1.6", &["strong-sync-B"], 50),
    ("thm-2.1", &["mixed-sequences"], 14),
    ("mantaci-identity", &["thm-3.2"], 100),
    ("reiner-identity", &["thm-4.2"], 7),
    ("sivasubramanian-identity", &["thm-4.5"], 100),
    ("ti-decomp-A", &[], 40),
    ("ti-decomp-B", &[], 40),
    ("unimodality", &[], 200),
    ("log-concavity", &[], 100),
    ("ratio-alternating", &[], 50),
    ("sagan-presets", &[], 30),
    ("equidistribution", &[], 7),
    ("oracle-A", &[], 9),
    ("oracle-B", &[], 7),
    ("counterexamples", &[], 6),
];

fn resolve_target(name: &str) -> Option<(&'static str, usize)> {
    VERIFY_TARGETS.iter().find_map(|(id, aliases, default)| {
        let hit =
            id.eq_ignore_ascii_case(name) || aliases.iter().any(|a| a.eq_ignore_ascii_case(name));
        hit.then_some((*id, *default))
    })
}

fn cmd_verify(a: &VerifyArgs, ctx: &Ctx) -> Result<Output> {
    let (target, default_n) = resolve_target(&a.target).ok_or_else(|| Error::Unknown {
        kind: "verify target",
        name: a.target.clone(),
    })?;
    let max_n = a.max_n.unwrap_or(default_n);
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let results = verify_target(target, max_n, ctx)?;
    let mut params = BTreeMap::new();
    params.insert("target".into(), json!(target));
    params.insert("max_n".into(), json!(max_n));
    finish("verify", params, results, None, None, a.format, ctx)
}

fn verify_target(target: &str, max_n: usize, ctx: &Ctx) -> Result<Vec<ResultEntry>> {
    // brute-force targets are rejected before any work starts
    match target {
        "oracle-A" => ctx.limits.check(Group::TypeA, max_n)?,
        "reiner-identity" | "oracle-B" => ctx.limits.check(Group::TypeB, max_n)?,
        "equidistribution" => {
            ctx.limits.check(Group::TypeA, max_n)?;
            ctx.limits.check(Group::TypeB, max_n)?;
        }
        _ => {}
    }
    let mut out = Vec::new();
    match target {
        "thm-1.5" | "thm-1.6" => {
            let pq = if target == "thm-1.5" {
                pq_a(max_n)
            } else {
                pq_b(max_n)
            };
            for n in 1..=max_n {
                let r = is_strongly_synchronised(pq.first.row(n), pq.second.row(n))?;
                out.push(ResultEntry::row(target, n, &r));
            }
        }
        "thm-2.1" => {
            for (label, pq) in [("pqA", pq_a(max_n)), ("pqB", pq_b(max_n))] {
                for n in 1..=max_n {
                    let (p, q) = (pq.first.row(n), pq.second.row(n));
                    let r = mixed_sequence_cross_check(p, q, DEFAULT_EXHAUSTIVE_CAP)?;
                    let e = ResultEntry::new(format!("thm-2.1/{label}"), n, row_witnesses(n, &r));
                    out.push(e.notes(&r.notes));
                }
            }
        }
        "mantaci-identity" => {
            out.push(ResultEntry::table(
                target,
                max_n,
                &mantaci_identity_check(&pq_a(max_n)),
            ));
        }
        "sivasubramanian-identity" => {
            out.push(ResultEntry::table(
                target,
                max_n,
                &sivasubramanian_identity_check(&pq_b(max_n)),
            ));
        }
        "reiner-identity" => {
            for n in 1..=max_n {
                let plus =
                    distribution_b_with(n, Statistic::DesB, ClassFilterB::Plus, &ctx.limits)?;
                let minus =
                    distribution_b_with(n, Statistic::DesB, ClassFilterB::Minus, &ctx.limits)?;
                let mut w = Vec::new();
                for k in 0..=n {
                    let diff = BigInt::from(plus[k].clone()) - BigInt::from(minus[k].clone());
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    if diff != BigInt::from(binomial(n as u64, k as u64)) * sign {
                        w.push([n as i64, k as i64]);
                    }
                }
                out.push(ResultEntry::new(target, n, w).note(format!("B+ = {plus}, B- = {minus}")));
            }
        }
        "ti-decomp-A" => out.push(ResultEntry::table(
            target,
            max_n,
            &ti_audit(&pq_a(max_n), CoxeterType::A),
        )),
        "ti-decomp-B" => out.push(ResultEntry::table(
            target,
            max_n,
            &ti_audit(&pq_b(max_n), CoxeterType::B),
        )),
        "unimodality" | "log-concavity" => {
            let check = if target == "unimodality" {
                is_unimodal
            } else {
                is_log_concave
            };
            let (a, b) = (pq_a(max_n), pq_b(max_n));
            for (label, t) in [
                ("P", &a.first),
                ("Q", &a.second),
                ("PB", &b.first),
                ("QB", &b.second),
            ] {
                let mut w = Vec::new();
                for n in 1..=max_n {
                    w.extend(row_witnesses(n, &check(t.row(n))));
                }
                out.push(ResultEntry::new(format!("{target}/{label}"), max_n, w));
            }
        }
        "ratio-alternating" => {
            for (label, pq, want) in [
                ("pqA", pq_a(max_n), RatioPattern::Pattern23),
                ("pqB", pq_b(max_n), RatioPattern::Pattern23),
            ] {
                for n in 1..=max_n {
                    out.push(ratio_entry(label, &pq, want, n)?);
                }
            }
        }
        "sagan-presets" => {
            for rule in CoeffRule::presets() {
                out.push(sagan_preset_entry(&rule, max_n)?);
            }
        }
        "equidistribution" => {
            for n in 1..=max_n {
                let r = equidistribution_check_with(n, &ctx.limits)?;
                let w = r
                    .witnesses
                    .iter()
                    .map(|w| [n as i64, w[1] as i64])
                    .collect();
                out.push(ResultEntry::new(target, n, w).notes(&r.notes));
            }
        }
        "oracle-A" => {
            let (pq, eul) = (pq_a(max_n), eulerian_a(max_n));
            for n in 1..=max_n {
                let even = distribution_a_with(n, Statistic::Exc, ClassFilterA::Even, &ctx.limits)?;
                let odd = distribution_a_with(n, Statistic::Exc, ClassFilterA::Odd, &ctx.limits)?;
                let des = distribution_a_with(n, Statistic::Des, ClassFilterA::All, &ctx.limits)?;
                let mut w = mismatch(n, &even, pq.first.row(n));
                w.extend(mismatch(n, &odd, pq.second.row(n)));
                w.extend(mismatch(n, &des, eul.row(n)));
                out.push(ResultEntry::new(target, n, w));
            }
        }
        "oracle-B" => {
            let (pq, eul) = (pq_b(max_n), eulerian_b(max_n));
            for n in 1..=max_n {
                let plus =
                    distribution_b_with(n, Statistic::ExcB, ClassFilterB::Plus, &ctx.limits)?;
                let minus =
                    distribution_b_with(n, Statistic::ExcB, ClassFilterB::Minus, &ctx.limits)?;
                let des = distribution_b_with(n, Statistic::DesB, ClassFilterB::All, &ctx.limits)?;
                let des_plus =
                    distribution_b_with(n, Statistic::DesB, ClassFilterB::Plus, &ctx.limits)?;
                let mut w = mismatch(n, &plus, pq.first.row(n));
                w.extend(mismatch(n, &minus, pq.second.row(n)));
                w.extend(mismatch(n, &des, eul.row(n)));
                w.extend(mismatch(n, &des_plus, pq.first.row(n)));
                out.push(ResultEntry::new(target, n, w));
            }
        }
        "counterexamples" => out.extend(counterexample_entries()?),
        _ => unreachable!("target list and dispatch agree"),
    }
    Ok(out)
}

fn row_witnesses(n: usize, r: &PropertyReport) -> Vec<[i64; 2]> {
    r.witnesses
        .iter()
        .map(|w| [n as i64, w.first().copied().unwrap_or(0) as i64])
        .collect()
}

fn mismatch(n: usize, got: &ExactSeq, want: &ExactSeq) -> Vec<[i64; 2]> {
    let len = got.len().max(want.len());
    (0..len as i64)
        .filter(|&k| got.get_or_zero(k) != want.get_or_zero(k))
        .map(|k| [n as i64, k])
        .collect()
}

fn ratio_entry(label: &str, pq: &PairTable, want: RatioPattern, n: usize) -> Result<ResultEntry> {
    let (p, q) = (pq.first.row(n), pq.second.row(n));
    let (ratio, pattern) = is_ratio_alternating(p, q)?;
    let mut w = row_witnesses(n, &ratio);
    let matches = pattern == want || pattern == RatioPattern::Both;
    if !matches && w.is_empty() {
        w.push([n as i64, 0]);
    }
    let mut notes = vec![format!("pattern {pattern:?}")];
    match ratio_parity_check(p, q) {
        Ok(r) => {
            w.extend(row_witnesses(n, &r));
            notes.extend(r.notes);
        }
        Err(Error::NotApplicable(m)) => notes.push(m),
        Err(e) => return Err(e),
    }
    Ok(ResultEntry::new(format!("ratio-alternating/{label}"), n, w).notes(&notes))
}

fn sagan_preset_entry(rule: &CoeffRule, max_n: usize) -> Result<ResultEntry> {
    let cert = certify_with(rule, Condition::ModifiedSagan, max_n);
    let mut w: Vec<[i64; 2]> = cert.witnesses.iter().map(|x| [x.n as i64, x.k]).collect();
    let built = build_triangle(rule, max_n)?;
    for n in 1..=max_n {
        w.extend(row_witnesses(n, &is_log_concave(built.row(n))));
    }
    if let Some(id) = rule.family {
        if let Family::Single(t) = family(id, max_n) {
            for n in 1..=max_n {
                w.extend(mismatch(n, built.row(n), t.row(n)));
            }
        }
    }
    let mut e = ResultEntry::new(format!("sagan-presets/{}", rule.name), max_n, w);
    for s in &cert.samples {
        e = e.note(format!("at (n,k) = ({},{}): {}", s.n, s.k, s.display));
    }
    Ok(e.note(format!(
        "uniform: {}",
        if cert.uniform { "yes" } else { "no" }
    )))
}

fn seqs(v: &[&[u64]]) -> Vec<ExactSeq> {
    v.iter().map(|s| ExactSeq::from_u64s(s)).collect()
}

/// The four published counterexample groups, each checked against the
/// verdicts it is meant to exhibit.
fn counterexample_entries() -> Result<Vec<ResultEntry>> {
    let mut out = Vec::new();
    let expect = |cond: bool, w: &mut Vec<[i64; 2]>, n: usize, k: i64| {
        if !cond {
            w.push([n as i64, k]);
        }
    };

    // A_6 and D_6: synchronised, not strongly synchronised at k = 1
    let ad = seqs(&[&[1, 57, 302, 302, 57, 1], &[0, 16, 104, 120, 24, 1]]);
    let sync = is_synchronised(&ad[0], &ad[1])?;
    let strong = is_strongly_synchronised(&ad[0], &ad[1])?;
    let mut w = Vec::new();
    expect(sync.verdict, &mut w, 6, -1);
    expect(strong.witness_indices().first() == Some(&1), &mut w, 6, 1);
    let (lo, hi) = (&ad[1][1], &ad[0][0] * &ad[0][2]);
    out.push(
        ResultEntry::new("counterexamples/A6-D6", 6, w)
            .note(format!("synchronised: {}", sync.verdict))
            .note(format!(
                "strong synchronisation fails at k = {:?}",
                strong.witness_indices()
            ))
            .note(format!("at k = 1: {lo}^2 = {} < {hi}", lo * lo)),
    );

    // strong synchronisation is not transitive
    let t = seqs(&[&[1, 4, 5], &[1, 5, 10], &[1, 6, 25]]);
    let ab = is_strongly_synchronised(&t[0], &t[1])?.verdict;
    let bc = is_strongly_synchronised(&t[1], &t[2])?.verdict;
    let ac = is_strongly_synchronised(&t[0], &t[2])?.verdict;
    let ac_sync = is_synchronised(&t[0], &t[2])?.verdict;
    let mut w = Vec::new();
    expect(ab && bc && !ac && !ac_sync, &mut w, 3, -1);
    out.push(
        ResultEntry::new("counterexamples/non-transitive", 3, w).note(format!(
            "A~B {ab}, B~C {bc}, A~C {ac}, A,C synchronised {ac_sync}"
        )),
    );

    // pairwise strongly synchronised triple with a non-log-concave mixture
    let t = seqs(&[&[1, 5, 3], &[7, 6, 3], &[6, 6, 4]]);
    let pairwise = [(0, 1), (1, 2), (0, 2)]
        .iter()
        .map(|&(i, j)| is_strongly_synchronised(&t[i], &t[j]).map(|r| r.verdict))
        .collect::<Result<Vec<_>>>()?;
    let fam = s_family_all_log_concave(&t, DEFAULT_EXHAUSTIVE_CAP)?;
    let mut w = Vec::new();
    let example = fam
        .example
        .as_ref()
        .map(|s| s.to_string())
        .unwrap_or_default();
    expect(
        pairwise.iter().all(|&v| v) && !fam.verdict && example == "(7,5,4)",
        &mut w,
        3,
        1,
    );
    out.push(
        ResultEntry::new("counterexamples/mixed-triple", 3, w)
            .note(format!("pairwise strongly synchronised: {pairwise:?}"))
            .note(format!("non-log-concave mixture {example}")),
    );

    // ratio-alternation is not transitive
    let t = seqs(&[&[1, 5, 7], &[3, 4, 10], &[2, 6, 8]]);
    let alt = |i: usize, j: usize| ratio_pattern(&t[i], &t[j]).map(|p| p != RatioPattern::Neither);
    let (ab, bc, ac) = (alt(0, 1)?, alt(1, 2)?, alt(0, 2)?);
    let mut w = Vec::new();
    expect(ab && bc && !ac, &mut w, 3, -1);
    out.push(
        ResultEntry::new("counterexamples/ratio-alternation", 3, w)
            .note(format!("A,B {ab}, B,C {bc}, A,C {ac}")),
    );
    Ok(out)
}

// ---------------------------------------------------------------- conjecture

fn cmd_conjecture(a: &ConjectureArgs, ctx: &Ctx) -> Result<Output> {
    if a.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    ctx.limits.check(Group::TypeA, a.max_n)?;
    let pq = pq_a(a.max_n);
    let mut results = Vec::new();
    for n in 1..=a.max_n {
        let plus = distribution_a_with(n, Statistic::Des, ClassFilterA::Even, &ctx.limits)?;
        let minus = distribution_a_with(n, Statistic::Des, ClassFilterA::Odd, &ctx.limits)?;
        match a.which {
            Which::C61 => {
                let r = is_strongly_synchronised(&plus, &minus)?;
                results.push(
                    ResultEntry::row("c61", n, &r).note(format!("A+ = {plus}, A- = {minus}")),
                );
            }
            Which::C62 => {
                let r = is_strongly_synchronised(&plus, pq.first.row(n))?;
                results.push(
                    ResultEntry::row("c62/A+,P", n, &r)
                        .note(format!("A+ = {plus}, P = {}", pq.first.row(n))),
                );
                let r = is_strongly_synchronised(&minus, pq.second.row(n))?;
                results.push(
                    ResultEntry::row("c62/A-,Q", n, &r)
                        .note(format!("A- = {minus}, Q = {}", pq.second.row(n))),
                );
            }
        }
    }
    let mut params = BTreeMap::new();
    params.insert(
        "conjecture".into(),
        json!(format!("{:?}", a.which).to_lowercase()),
    );
    params.insert("max_n".into(), json!(a.max_n));
    finish(
        "conjecture",
        params,
        results,
        Some(EVIDENCE_LABEL),
        None,
        a.format,
        ctx,
    )
}

// ---------------------------------------------------------------- certify

fn cmd_certify(a: &CertifyArgs, ctx: &Ctx) -> Result<Output> {
    if a.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let condition: Condition = a.condition.parse()?;
    let mut params = BTreeMap::new();
    let rule = match (&a.preset, &a.rule) {
        (Some(p), _) => {
            params.insert("preset".into(), json!(p));
            CoeffRule::preset(p)?
        }
        (None, Some(path)) => {
            params.insert("rule".into(), json!(path.display().to_string()));
            let src = std::fs::read_to_string(path)
                .map_err(|e| Error::RuleParse(format!("{}: {e}", path.display())))?;
            CoeffRule::from_toml_str(&src)?
        }
        (None, None) => unreachable!("clap requires one of --preset/--rule"),
    };
    params.insert("condition".into(), json!(condition.to_string()));
    params.insert("max_n".into(), json!(a.max_n));
    let cert = certify_with(&rule, condition, a.max_n);
    let w = cert.witnesses.iter().map(|x| [x.n as i64, x.k]).collect();
    let entry = ResultEntry::new(rule.name.clone(), a.max_n, w)
        .note(format!("c = {}, d = {}", rule.c, rule.d));
    finish(
        "certify",
        params,
        vec![entry],
        None,
        Some(cert),
        a.format,
        ctx,
    )
}

// ---------------------------------------------------------------- reports

fn finish(
    command: &str,
    params: BTreeMap<String, Value>,
    results: Vec<ResultEntry>,
    label: Option<&'static str>,
    certificate: Option<Certificate>,
    format: ReportFormat,
    ctx: &Ctx,
) -> Result<Output> {
    let pass = results.iter().all(|r| r.verdict) && certificate.as_ref().is_none_or(|c| c.verdict);
    let failed = results.iter().filter(|r| !r.verdict).count();
    let mut stderr = String::new();
    let summary = if pass {
        format!("{command}: pass ({} checks)", results.len())
    } else {
        format!("{command}: FAIL ({failed} of {} checks)", results.len())
    };
    match label {
        Some(l) => {
            let _ = writeln!(stderr, "{summary} [{l}]");
        }
        None => {
            let _ = writeln!(stderr, "{summary}");
        }
    }
    let report = RunReport {
        command: command.to_string(),
        params,
        results,
        label,
        certificate,
        integers_as: "decimal-strings",
        version: env!("CARGO_PKG_VERSION"),
        timing_ms: ctx.timing.then(|| ctx.started.elapsed().as_millis() as u64),
    };
    let stdout = match format {
        ReportFormat::Json => to_json(&report),
        ReportFormat::Text => render_text(&report),
    };
    Ok(Output {
        stdout,
        stderr,
        code: if pass { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn render_text(r: &RunReport) -> String {
    let mut s = String::new();
    if let Some(l) = r.label {
        let _ = writeln!(s, "# {l}");
    }
    for e in &r.results {
        let _ = write!(
            s,
            "{} {} n={}",
            if e.verdict { "PASS" } else { "FAIL" },
            e.target,
            e.n
        );
        if !e.witnesses.is_empty() {
            let pts: Vec<String> = e
                .witnesses
                .iter()
                .map(|[n, k]| format!("({n},{k})"))
                .collect();
            let _ = write!(s, " witnesses {}", pts.join(" "));
        }
        s.push('\n');
        for note in &e.notes {
            let _ = writeln!(s, "    {note}");
        }
    }
    if let Some(c) = &r.certificate {
        let _ = writeln!(
            s,
            "certificate {} {}: verdict {}, uniform {}, checked n <= {}",
            c.rule_name, c.condition, c.verdict, c.uniform, c.n_max_checked
        );
        for w in &c.witnesses {
            let _ = writeln!(s, "    ({},{}) {:?}: {}", w.n, w.k, w.kind, w.detail);
        }
        for x in &c.samples {
            let _ = writeln!(s, "    at ({},{}): {}", x.n, x.k, x.display);
        }
    }
    if let Some(t) = r.timing_ms {
        let _ = writeln!(s, "time {t} ms");
    }
    s
}
