//! Statistics of single permutations and signed permutations.
//!
//! cargo run --example statistics

use strongsync::{PermutationA, SignedPermutation, Statistic};

fn main() -> strongsync::Result<()> {
    let pi = PermutationA::new(vec![3, 1, 4, 2])?;
    println!(
        "pi = {pi}, parity {:?}, derangement {}",
        pi.parity(),
        pi.is_derangement()
    );
    for s in [
        Statistic::Exc,
        Statistic::Nexc,
        Statistic::Des,
        Statistic::Asc,
        Statistic::Inv,
    ] {
        println!("  {:>5} = {}", s.name(), pi.stat(s)?);
    }

    let sigma = PermutationA::new(vec![2, 1, 3, 4])?;
    let composed = pi.compose(&sigma)?;
    println!(
        "pi . (2,1,3,4) = {composed}, parity {:?}",
        composed.parity()
    );

    for window in [vec![-1], vec![-2, -1], vec![-1, -2], vec![3, -1, 2]] {
        let w = SignedPermutation::new(window)?;
        print!("{w}:");
        for s in [
            Statistic::ExcB,
            Statistic::WkexcB,
            Statistic::DesB,
            Statistic::AscB,
            Statistic::InvB,
            Statistic::Negs,
        ] {
            print!(" {}={}", s.name(), w.stat(s)?);
        }
        println!("  ({:?})", w.length_parity());
    }

    // asking a Type A element for a Type B statistic is an error, not a panic
    if let Err(e) = pi.stat(Statistic::DesB) {
        println!("expected error: {e}");
    }
    Ok(())
}
