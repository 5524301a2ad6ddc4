//! Every family triangle from its recurrence, and the difference identities.
//!
//! cargo run --example recurrences

use strongsync::recurrence::{
    family, mantaci_identity_check, pq_a, pq_b, sivasubramanian_identity_check,
};
use strongsync::{Family, FamilyId};

fn main() {
    let n = 6;
    for id in FamilyId::ALL {
        match family(id, n) {
            Family::Single(t) => {
                println!("{id} (k from {})", t.k_offset);
                for row in t.rows() {
                    println!("  {row}");
                }
            }
            Family::Pair(p) => {
                println!("{id}");
                for m in 1..=n {
                    println!("  {}  {}", p.first.row(m), p.second.row(m));
                }
            }
        }
    }

    let big = 200;
    let a = mantaci_identity_check(&pq_a(big));
    let b = sivasubramanian_identity_check(&pq_b(big));
    println!("{} up to n = {big}: {}", a.property, a.verdict);
    println!("{} up to n = {big}: {}", b.property, b.verdict);
    println!(
        "P_{big},100 has {} digits",
        pq_a(big).first.row(big)[100].to_string().len()
    );
}
