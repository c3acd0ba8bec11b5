//! The quadric double-cover machinery in both cases: the branch quartic
//! identity, the incidence relations on the cone, and the orbit profiles of
//! the distinguished lines.
//!
//!     cargo run --example double_cover

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
        println!("branch quartic: {} terms", case.branch_quartic.num_terms());
        for r in type_ir::check_double_cover(case, &ctx) {
            println!("{}: {:?}\n  {}", r.id, r.status, r.notes);
        }
        for r in type_ir::check_univ_relations(case, &ctx) {
            println!("{}: {:?}\n  {}", r.id, r.status, r.notes);
            if let Some(w) = &r.witness {
                println!("  first certificate: {w}");
            }
        }
        for r in type_ir::check_orbit_reps(case, &ctx) {
            println!("{}: {:?}\n  {}", r.id, r.status, r.notes);
        }
        println!();
    }
}
