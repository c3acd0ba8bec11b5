//! Ideal-membership certificates by exact linear algebra: the proof object
//! behind every "points of the variety satisfy ..." statement.
//!
//!     cargo run --example membership_certificates

use qfano_verify::membership::{find_certificate, GeneratorSet};
use qfano_verify::parse::parse_poly_env;
use qfano_verify::type_r;

fn main() {
    let d = type_r::data();

    // the two 5-term relations satisfied by the points of the midpoint
    // variety, certified over its five defining equations
    let gens = GeneratorSet::new(d.rf[..5].to_vec()).unwrap();
    for (label, formula) in [
        ("x-relation", "x1*f5 - x2*f4 + x3*f3 - x4*f2 + x5*f1"),
        ("y-relation", "y1*f5 - y2*f4 + y3*f3 - y4*f2 + y5*f1"),
    ] {
        let target = parse_poly_env(&d.ring, &d.env, formula).unwrap();
        let cert = find_certificate(&target, &gens, 1)
            .unwrap()
            .expect("certificate exists with linear coefficients");
        assert!(cert.verify(&gens));
        println!("{label}: {formula}");
        println!("  = {}", cert.to_text());
        println!("  (re-expansion checked exactly)\n");
    }

    // a negative result is a bounded statement, not a refutation
    let x1 = parse_poly_env(&d.ring, &d.env, "x1").unwrap();
    let sq = GeneratorSet::new(vec![parse_poly_env(&d.ring, &d.env, "x1^2").unwrap()]).unwrap();
    let none = find_certificate(&x1, &sq, 4).unwrap();
    println!(
        "x1 over (x1^2) at bound 4: {:?} — reported as inconclusive, never as non-membership",
        none.map(|c| c.to_text())
    );
}
