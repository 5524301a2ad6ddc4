//! Log-concavity certificates for triangular recurrences, on the bundled
//! presets and on a rule written inline.
//!
//! cargo run --example sagan_certify

use strongsync::properties::is_log_concave;
use strongsync::sagan::{
    build_triangle, certify_modified_sagan, certify_sagan, sagan_implies_modified, CoeffRule,
};

const CUSTOM: &str = r#"
name = "binomial-like"
pairing = "c-shifted"
initial_row = [1, 1]
k_min = 0
c = { k = 0, n = 0, constant = 1 }
d = { k = 0, n = 0, constant = 1 }
k_max = { n = 1, offset = 0, div = 1 }
"#;

fn main() -> strongsync::Result<()> {
    let euler = CoeffRule::preset("eulerA")?;
    let classic = certify_sagan(&euler, 10);
    println!("eulerA, classical condition: {}", classic.verdict);
    if let Some(w) = classic.witnesses.iter().find(|w| (w.n, w.k) == (3, 1)) {
        println!("  at (3,1): {}", w.detail);
    }

    for rule in CoeffRule::presets() {
        let cert = certify_modified_sagan(&rule, 60);
        let rows_ok = build_triangle(&rule, 60)?
            .rows()
            .iter()
            .all(|r| is_log_concave(r).verdict);
        println!(
            "{:<17} c = {:<8} d = {:<10} modified {} uniform {} {:?}, rows log-concave {}",
            rule.name,
            rule.c.to_string(),
            rule.d.to_string(),
            cert.verdict,
            cert.uniform,
            cert.sample_displays(),
            rows_ok
        );
    }

    let custom: CoeffRule = CUSTOM.parse()?;
    let t = build_triangle(&custom, 6)?;
    println!("{}: row 6 = {}", custom.name, t.row(6));
    println!("  classical {}", certify_sagan(&custom, 20).verdict);
    println!(
        "  classical implies modified: {}",
        sagan_implies_modified(&custom, 20).verdict
    );
    Ok(())
}
