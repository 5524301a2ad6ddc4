//! Log-concavity, synchronisation and strong synchronisation, on the
//! excedance pairs and on the small counterexamples.
//!
//! cargo run --example strong_sync

use strongsync::properties::{
    interlacing_check, is_log_concave, is_ratio_alternating, is_strongly_synchronised,
    is_synchronised, mixed_sequence_cross_check, s_family_all_log_concave, DEFAULT_EXHAUSTIVE_CAP,
};
use strongsync::recurrence::{pq_a, pq_b};
use strongsync::ExactSeq;

fn s(v: &[u64]) -> ExactSeq {
    ExactSeq::from_u64s(v)
}

fn main() -> strongsync::Result<()> {
    let (a, b) = (pq_a(60), pq_b(60));
    let ok_a = (1..=60).all(|n| {
        is_strongly_synchronised(a.first.row(n), a.second.row(n))
            .unwrap()
            .verdict
    });
    let ok_b = (1..=60).all(|n| {
        is_strongly_synchronised(b.first.row(n), b.second.row(n))
            .unwrap()
            .verdict
    });
    println!("(P_n, Q_n) strongly synchronised for n <= 60: {ok_a}");
    println!("(P^B_n, Q^B_n) strongly synchronised for n <= 60: {ok_b}");

    let (p5, q5) = (a.first.row(5), a.second.row(5));
    let (ratio, pattern) = is_ratio_alternating(p5, q5)?;
    println!(
        "P_5 = {p5}, Q_5 = {q5}: ratio-alternating {} ({pattern:?})",
        ratio.verdict
    );
    println!(
        "interlacing on P_5, Q_5: {}",
        interlacing_check(p5, q5)?.verdict
    );
    println!(
        "mixed sequences agree with min/max: {}",
        mixed_sequence_cross_check(p5, q5, DEFAULT_EXHAUSTIVE_CAP)?.verdict
    );

    let (a6, d6) = (s(&[1, 57, 302, 302, 57, 1]), s(&[0, 16, 104, 120, 24, 1]));
    let strong = is_strongly_synchronised(&a6, &d6)?;
    println!(
        "A_6, D_6: synchronised {}, strongly synchronised {} (fails at k = {:?})",
        is_synchronised(&a6, &d6)?.verdict,
        strong.verdict,
        strong.witness_indices()
    );

    let triple = [s(&[1, 5, 3]), s(&[7, 6, 3]), s(&[6, 6, 4])];
    let fam = s_family_all_log_concave(&triple, DEFAULT_EXHAUSTIVE_CAP)?;
    println!(
        "pairwise strongly synchronised triple, every mixture log-concave: {} (example {})",
        fam.verdict,
        fam.example.map(|e| e.to_string()).unwrap_or_default()
    );
    println!(
        "(7,5,4) log-concave: {}",
        is_log_concave(&s(&[7, 5, 4])).verdict
    );
    Ok(())
}
