//! The degree-six symmetric group acting on the codimension-4 family: five
//! involutive generators (four linear, one affine-quadratic on the even
//! coordinates), their Coxeter presentation, the 9-dimensional representation
//! spanned by the defining equations, and the invariant quartic.
//!
//!     cargo run --example symmetric_group

use qfano_verify::membership::linear_span_matrix;
use qfano_verify::rational::fmt_rat;
use qfano_verify::report::RunCtx;
use qfano_verify::type_r;

fn main() {
    let d = type_r::data();

    println!("generator assignments (first generator, on a few coordinates):");
    for name in ["x1", "x2", "r15", "r0"] {
        let ix = d.ring.index_of(name).unwrap();
        println!("  {name} -> {}", d.sigma[0].assignment[ix]);
    }
    println!("\nthe fifth generator is affine-quadratic on the even block:");
    let ix = d.ring.index_of("r15").unwrap();
    println!("  r15 -> {}", d.sigma[4].assignment[ix]);

    let results = type_r::check_s6_action(&RunCtx {
        seed: 1,
        trials: 5,
        degree_bound: 4,
    });
    println!();
    for r in &results {
        println!("{}: {:?}\n  {}", r.id, r.status, r.notes);
    }

    // span matrices: print the first one
    let sm = linear_span_matrix(&d.rf, &d.sigma[0]).unwrap().unwrap();
    println!("\nspan matrix of the first generator on (RF1..RF9):");
    for i in 0..9 {
        let row: Vec<String> = (0..9).map(|j| fmt_rat(&sm.matrix[(i, j)])).collect();
        println!("  [{}]", row.join(", "));
    }
    println!("trace = {}", fmt_rat(&sm.matrix.trace()));
}
