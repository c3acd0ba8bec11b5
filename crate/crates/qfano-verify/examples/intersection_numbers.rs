//! Intersection arithmetic on the rank-2 divisor lattice: both chains of
//! Sarkisov numerics, everything derived from three shared products plus one
//! cube, with the one printed-value disagreement surfaced rather than
//! adopted.
//!
//!     cargo run --example intersection_numbers

use qfano_verify::intersection::{
    derive_from_le_system, first_chain_numerics, intersection_checks, second_chain_numerics,
};
use qfano_verify::rational::fmt_rat;

fn main() {
    for (name, chain) in [
        ("first chain (target P^3)", first_chain_numerics()),
        ("second chain (target dP2)", second_chain_numerics()),
    ] {
        println!("== {name} ==");
        println!(
            "form: A^3 = {}, A^2E = {}, AE^2 = {}, E^3 = {}",
            fmt_rat(&chain.form.a3),
            fmt_rat(&chain.form.a2e),
            fmt_rat(&chain.form.ae2),
            fmt_rat(&chain.form.e3),
        );
        for row in &chain.rows {
            println!("  {}", row.render());
        }
        println!();
    }

    let d = derive_from_le_system(2, 4, -10, &qfano_verify::rat(5, 2)).unwrap();
    println!(
        "second chain derived products: A^2 Et = {}, A Et^2 = {}, Et^3 = {}, A^2 L = {}",
        fmt_rat(&d.a2et),
        fmt_rat(&d.aet2),
        fmt_rat(&d.et3),
        fmt_rat(&d.a2l),
    );
    println!("(the printed line says A^2 L = 8; the derivation gives 4 — see the discrepancy row)\n");

    for r in intersection_checks() {
        println!("{}: {:?}", r.id, r.status);
        println!("  {}", r.notes);
    }
}
