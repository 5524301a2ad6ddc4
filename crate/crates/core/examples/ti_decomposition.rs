//! The nine-term expansion of P_{n,k}^2 - P_{n,k+1} P_{n,k-1} in both types.
//!
//! cargo run --example ti_decomposition

use strongsync::recurrence::{
    pq_a, pq_b, ti_audit, ti_decomposition_a, ti_decomposition_b, CoxeterType,
};

fn main() -> strongsync::Result<()> {
    let a = pq_a(12);
    let d = ti_decomposition_a(&a, 9, 3)?;
    println!("type A, n = 9, k = 3");
    for i in 1..=9 {
        println!("  T_{i} = {}", d.t(i));
    }
    println!("  residual {}", d.residual);
    println!(
        "  T1+T5+T7 = {}, T4+T6+T8+T9 = {}",
        d.sum_of(&[1, 5, 7]),
        d.sum_of(&[4, 6, 8, 9])
    );

    let b = pq_b(12);
    let d = ti_decomposition_b(&b, 9, 3)?;
    println!(
        "type B, n = 9, k = 3: residual {}, T_2 = {}",
        d.residual,
        d.t(2)
    );

    for (name, report) in [
        ("A", ti_audit(&pq_a(60), CoxeterType::A)),
        ("B", ti_audit(&pq_b(60), CoxeterType::B)),
    ] {
        println!(
            "audit {name} up to n = 60: {} ({})",
            report.verdict,
            report.notes.join("; ")
        );
    }
    Ok(())
}
