//! Brute-force evidence for the two open conjectures on descents over the
//! alternating group. Evidence, not proof.
//!
//! cargo run --release --example conjectures [max_n]

use strongsync::enumerate::{distribution_a, ClassFilterA};
use strongsync::properties::is_strongly_synchronised;
use strongsync::recurrence::pq_a;
use strongsync::Statistic;

fn main() -> strongsync::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    let pq = pq_a(max_n);
    for n in 1..=max_n {
        let plus = distribution_a(n, Statistic::Des, ClassFilterA::Even)?;
        let minus = distribution_a(n, Statistic::Des, ClassFilterA::Odd)?;
        let c61 = is_strongly_synchronised(&plus, &minus)?.verdict;
        let c62 = is_strongly_synchronised(&plus, pq.first.row(n))?.verdict
            && is_strongly_synchronised(&minus, pq.second.row(n))?.verdict;
        println!("n = {n}: A+ = {plus}, A- = {minus}, c61 {c61}, c62 {c62}");
    }
    Ok(())
}
