//! The commuting ladder between the Koszul complex of the four even
//! coordinates and the Pfaffian resolution of the midpoint ideal — the
//! matrix identities that drive the unprojection to codimension four.
//!
//!     cargo run --example resolution_diagram

use qfano_verify::report::RunCtx;
use qfano_verify::type_r;

fn main() {
    let d = type_r::data();
    println!("ladder shapes:");
    println!("  top:    0 -> P --A3({}x{})--> P^5 --A2({}x{})--> P^5 --A1({}x{})--> P",
        d.a3.rows, d.a3.cols, d.a2.rows, d.a2.cols, d.a1.rows, d.a1.cols);
    println!("  bottom: P --C4({}x{})--> P^4 --C3({}x{})--> P^6 --C2({}x{})--> P^4 --C1({}x{})--> P",
        d.c4.rows, d.c4.cols, d.c3.rows, d.c3.cols, d.c2.rows, d.c2.cols, d.c1.rows, d.c1.cols);
    println!("  rungs:  B3({}x{}), B2({}x{}), B1({}x{})",
        d.b3.rows, d.b3.cols, d.b2.rows, d.b2.cols, d.b1.rows, d.b1.cols);

    let results = type_r::check_complexes(&RunCtx::default());
    for r in &results {
        println!("\n{}: {:?}", r.id, r.status);
        println!("  {}", r.notes);
    }

    // the unprojection equations come from the B3 rung: show one of them
    println!("\nthe first unprojection equation (r0*r15 minus thirty times the first quartic):");
    println!("  RF6 has {} terms, weighted degree 4", d.rf[5].num_terms());
}
