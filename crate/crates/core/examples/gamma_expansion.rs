//! Gamma coefficients of the Eulerian polynomials of both types, expanded
//! back in the basis t^k (1+t)^(d-2k).
//!
//! cargo run --example gamma_expansion

use strongsync::recurrence::{eulerian_a, eulerian_b, gamma_a, gamma_b, gamma_expansion};

fn main() {
    let n = 10;
    let (ga, gb, ea, eb) = (gamma_a(n), gamma_b(n), eulerian_a(n), eulerian_b(n));
    for m in 1..=n {
        let back_a = gamma_expansion(ga.row(m), m - 1);
        let back_b = gamma_expansion(gb.row(m), m);
        println!(
            "n = {m:>2}: gammaA {:<28} matches A_n {}   gammaB {:<34} matches B_n {}",
            ga.row(m).to_string(),
            &back_a == ea.row(m),
            gb.row(m).to_string(),
            &back_b == eb.row(m)
        );
    }
}
