//! Build the codimension-4 key family and walk through its named pieces:
//! the quadric minors, the binomial slice, the nine equations, and the
//! identification of the first five with signed Pfaffians.
//!
//!     cargo run --example key_family

use qfano_verify::report::RunCtx;
use qfano_verify::ring::Degree;
use qfano_verify::type_r;

fn main() {
    let d = type_r::data();
    println!("ambient: weighted ring on {:?}", d.ring.var_names());
    println!("weights: {:?}\n", d.ring.weights());

    println!("the binomial slice quadrics:");
    for (k, f) in d.f.iter().enumerate() {
        println!("  f{} = {}", k + 1, f);
    }

    println!("\nthe first defining equation:");
    println!("  RF1 = {}", d.rf[0]);
    println!("\nthe first unprojection equation (30 * the quartic combination):");
    println!("  RF6 = {}", d.rf[5]);

    println!("\nweighted degrees:");
    for (k, p) in d.rf.iter().enumerate() {
        if let Degree::Homogeneous(deg) = p.weighted_degree() {
            print!("RF{}:{} ", k + 1, deg);
        }
    }
    println!("\n\nthe invariant quartic:\n  D_R = {}", d.d_r);

    for r in type_r::check_rf_are_plucker(&RunCtx::default()) {
        println!("\n{}: {:?}\n  {}", r.id, r.status, r.notes);
        if let Some(w) = &r.witness {
            println!("  {w}");
        }
    }
}
