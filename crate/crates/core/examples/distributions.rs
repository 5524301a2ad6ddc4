//! Brute-force distributions over S_n and B_n and their subclasses.
//!
//! cargo run --release --example distributions [n]

use strongsync::enumerate::{
    distribution_a, distribution_b, equidistribution_check, ClassFilterA, ClassFilterB,
};
use strongsync::Statistic;

fn main() -> strongsync::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);

    println!("S_{n}");
    for (stat, class) in [
        (Statistic::Exc, ClassFilterA::Even),
        (Statistic::Exc, ClassFilterA::Odd),
        (Statistic::Des, ClassFilterA::All),
        (Statistic::Des, ClassFilterA::Derangement),
        (Statistic::Inv, ClassFilterA::All),
    ] {
        println!(
            "  {:>4} {:<11} {}",
            stat.name(),
            class.to_string(),
            distribution_a(n, stat, class)?
        );
    }

    let m = n.min(7);
    println!("B_{m}");
    for (stat, class) in [
        (Statistic::ExcB, ClassFilterB::Plus),
        (Statistic::ExcB, ClassFilterB::Minus),
        (Statistic::DesB, ClassFilterB::Plus),
        (Statistic::DesB, ClassFilterB::Minus),
        (Statistic::InvB, ClassFilterB::All),
    ] {
        println!(
            "  {:>4} {:<5} {}",
            stat.name(),
            class.to_string(),
            distribution_b(m, stat, class)?
        );
    }

    let eq = equidistribution_check(m)?;
    println!(
        "des ~ exc and desB ~ excB at n = {m}: {} {:?}",
        eq.verdict, eq.notes
    );

    match distribution_a(40, Statistic::Exc, ClassFilterA::All) {
        Ok(_) => unreachable!(),
        Err(e) => println!("guard: {e}"),
    }
    Ok(())
}
