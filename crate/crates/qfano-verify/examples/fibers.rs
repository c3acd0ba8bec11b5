//! Fibers of the relative model over the orbit representatives: component
//! decompositions verified symbolically, with the converse direction pinned
//! by radical-membership certificates.
//!
//!     cargo run --example fibers

use qfano_verify::report::RunCtx;
use qfano_verify::type_ir;

fn main() {
    let ctx = RunCtx {
        seed: 1,
        trials: 10,
        degree_bound: 4,
    };
    for case in [type_ir::general(), type_ir::special()] {
        println!("== {} case ==", case.tag.as_str());
        for r in type_ir::check_fibers(case, &ctx) {
            println!("{}: {:?}", r.id, r.status);
            println!("  {}", r.notes);
        }
        println!();
    }
}
