//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use qfano_verify::membership::{find_certificate, GeneratorSet};
use qfano_verify::pfaffian::{SkewPolyMatrix5, PAIRS, PLUCKER_INDEX_SETS};
use qfano_verify::report::{RunCtx, Status};
use qfano_verify::ring::{Poly, PolyMap, WeightedRing};
use qfano_verify::runner;
use qfano_verify::{rat_i, type_ir, type_r};

fn ctx() -> RunCtx {
    RunCtx {
        seed: 1,
        trials: 25,
        degree_bound: 4,
    }
}

fn criterion(n: usize, what: &str, ok: bool) {
    println!(
        "criterion {:>2} ({what}): {}",
        n,
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {what}");
}

fn all_pass(results: &[qfano_verify::report::CheckResult]) -> bool {
    assert!(!results.is_empty());
    results.iter().all(|r| {
        if r.status != Status::Pass {
            eprintln!("  not passing: {} [{:?}] {}", r.id, r.status, r.notes);
        }
        r.status == Status::Pass
    })
}

#[test]
fn criterion_01_plucker_vanishing() {
    // q(x, y) minors on ten variables
    let t = Instant::now();
    let xy = WeightedRing::unweighted(&[
        "x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5",
    ]);
    let entries: Vec<Poly> = PAIRS
        .iter()
        .map(|(i, j)| {
            let xi = Poly::var(&xy, &format!("x{i}")).unwrap();
            let xj = Poly::var(&xy, &format!("x{j}")).unwrap();
            let yi = Poly::var(&xy, &format!("y{i}")).unwrap();
            let yj = Poly::var(&xy, &format!("y{j}")).unwrap();
            &xi * &yj - &xj * &yi
        })
        .collect();
    let skew = SkewPolyMatrix5::new(&xy, entries).unwrap();
    let first = skew.plucker().is_zero();
    let t1 = t.elapsed();

    // the two quadric families of the double-cover suite (asserted at build
    // and re-derived here through the public surface)
    let mut case_ok = true;
    let mut case_times = Vec::new();
    for case in [type_ir::general(), type_ir::special()] {
        let t = Instant::now();
        let entries: Vec<Poly> = PAIRS.iter().map(|ij| case.q[ij].clone()).collect();
        let skew = SkewPolyMatrix5::new(&case.cone_ring, entries).unwrap();
        if !skew.plucker().is_zero() {
            case_ok = false;
        }
        case_times.push(t.elapsed());
    }
    let fast = t1.as_secs() < 1 && case_times.iter().all(|d| d.as_secs() < 1);
    criterion(1, "Plücker vanishing of all three quadric families", first && case_ok && fast);
}

#[test]
fn criterion_02_f_derivation() {
    // substituting the linear slice into the five generic Pfaffians
    // reproduces f1..f5 exactly (sign matching recorded: all +1)
    let names: Vec<String> = PAIRS.iter().map(|(i, j)| format!("g{i}{j}")).collect();
    let refs: Vec<(&str, u64)> = names.iter().map(|n| (n.as_str(), 1)).collect();
    let big = WeightedRing::new(&refs);
    let small = WeightedRing::unweighted(&["s15", "s24", "s34", "s35"]);
    let v = |n: &str| Poly::var(&small, n).unwrap();
    let assignment: Vec<Poly> = PAIRS
        .iter()
        .map(|(i, j)| match (i, j) {
            (1, 2) | (1, 4) | (4, 5) => Poly::zero(&small),
            (1, 3) => v("s34") + v("s35"),
            (2, 3) => -(v("s34") + v("s35")),
            (2, 5) => -v("s35"),
            (1, 5) => v("s15"),
            (2, 4) => v("s24"),
            (3, 4) => v("s34"),
            (3, 5) => v("s35"),
            _ => unreachable!(),
        })
        .collect();
    let slice = PolyMap::new(&big, &small, assignment).unwrap();
    let generic = SkewPolyMatrix5::generic(&big, |i, j| format!("g{i}{j}")).unwrap();
    let expect = [
        "-s24*(s34 + s35)",
        "-(s15 - s35)*(s34 + s35)",
        "s15*s24",
        "s15*s34",
        "-(s24 + s34)*s35",
    ];
    let mut ok = true;
    for (k, idx) in PLUCKER_INDEX_SETS.iter().enumerate() {
        let pf = generic.pfaffian4(*idx).unwrap().substitute(&slice).unwrap();
        let e = qfano_verify::parse::parse_poly(&small, expect[k]).unwrap();
        if pf != e {
            ok = false;
        }
    }
    criterion(2, "slice substitution reproduces f1..f5 with signs +1", ok);
}

#[test]
fn criterion_03_segre_identity_and_points() {
    let r = type_r::check_segre(&ctx());
    criterion(3, "cubic pullback zero and determinant battery", all_pass(&r));
}

#[test]
fn criterion_04_resolution_diagram() {
    let r = type_r::check_complexes(&ctx());
    criterion(4, "commutation and complex identities of the diagram", all_pass(&r));
}

#[test]
fn criterion_05_symmetric_group() {
    let r = type_r::check_s6_action(&ctx());
    let trace = r
        .iter()
        .find(|c| c.id == "typeR.s6.trace")
        .map(|c| c.notes.contains("= 3"))
        .unwrap_or(false);
    criterion(5, "Coxeter relations, span matrices, trace 3, invariant quartic", all_pass(&r) && trace);
}

#[test]
fn criterion_06_rank_matrix() {
    let r = type_r::check_mq(&ctx());
    criterion(6, "4x4 minors zero, 3x3 minors certified, rank strata sampled", all_pass(&r));
}

#[test]
fn criterion_07_singular_points() {
    let r = type_r::check_singular_points(&ctx());
    criterion(7, "six points and five loci exact; Jacobian ranks", all_pass(&r));
}

#[test]
fn criterion_08_memberships() {
    let mut ok = all_pass(&type_r::check_two_relations(&ctx()));
    let maps = type_r::check_maps_and_weights(&ctx());
    for want in ["typeR.maps.gtilde", "typeR.maps.ghat_fhat"] {
        ok &= maps
            .iter()
            .find(|c| c.id == want)
            .map(|c| c.status == Status::Pass)
            .unwrap_or(false);
    }
    for case in [type_ir::general(), type_ir::special()] {
        ok &= all_pass(&type_ir::check_univ_relations(case, &ctx()));
        ok &= all_pass(&type_ir::check_gtilde_and_psi(case, &ctx()));
    }
    // certificates re-expand exactly through an independent path
    let d = type_r::data();
    let gens = GeneratorSet::new(d.rf[..5].to_vec()).unwrap();
    let tx = {
        let p = |s: &str| qfano_verify::parse::parse_poly_env(&d.ring, &d.env, s).unwrap();
        p("x1*f5 - x2*f4 + x3*f3 - x4*f2 + x5*f1")
    };
    let cert = find_certificate(&tx, &gens, 1).unwrap().unwrap();
    ok &= cert.verify(&gens);
    criterion(8, "membership certificates exist and re-expand exactly", ok);
}

#[test]
fn criterion_09_double_covers() {
    let mut ok = true;
    for case in [type_ir::general(), type_ir::special()] {
        ok &= all_pass(&type_ir::check_double_cover(case, &ctx()));
        ok &= all_pass(&type_ir::check_veronese_image(case, &ctx()));
    }
    criterion(9, "double-cover identities and the special quadric identity", ok);
}

#[test]
fn criterion_10_fibers_and_orbits() {
    let mut ok = true;
    for case in [type_ir::general(), type_ir::special()] {
        ok &= all_pass(&type_ir::check_fibers(case, &ctx()));
        ok &= all_pass(&type_ir::check_orbit_reps(case, &ctx()));
    }
    criterion(10, "fiber identities and orbit incidence profiles", ok);
}

#[test]
fn criterion_11_intersection_numerics() {
    let rows = qfano_verify::intersection::intersection_checks();
    let mut ok = true;
    for want in [
        "intersection.typeR",
        "intersection.typeIR",
        "intersection.derived.typeR",
        "intersection.derived.typeIR",
        "intersection.diophantine",
    ] {
        ok &= rows
            .iter()
            .find(|r| r.id == want)
            .map(|r| r.status == Status::Pass)
            .unwrap_or(false);
    }
    // the known printed-value disagreement is surfaced as a discrepancy with
    // the derived value 4 and the contradiction re-established
    let disc = rows
        .iter()
        .find(|r| r.id == "intersection.discrepancy.typeIR_KL")
        .expect("discrepancy row present");
    ok &= disc.status == Status::Discrepancy;
    ok &= disc.notes.contains("derived (A^3 + A^2 Et)/2 = 4");
    ok &= disc.notes.contains("5mk=22: no solutions");
    ok &= disc.notes.contains("5mk=54: no solutions");
    // frozen printed values
    let chain = qfano_verify::intersection::first_chain_numerics();
    ok &= chain.form.e3 == rat_i(-5);
    let chain2 = qfano_verify::intersection::second_chain_numerics();
    ok &= chain2.form.e3 == rat_i(-6);
    criterion(11, "intersection numerics with the discrepancy finding", ok);
}

#[test]
fn criterion_12_determinism() {
    let ctx = RunCtx {
        seed: 42,
        trials: 5,
        degree_bound: 4,
    };
    // a representative slice including every randomized check family
    let pats: Vec<String> = ["core", "intersection", "typeR.mq", "typeR.qfacr_chart", "typeIR"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let a = runner::run(&pats, &ctx, false);
    let b = runner::run(&pats, &ctx, false);
    let ra = runner::render(&a.results, true);
    let rb = runner::render(&b.results, true);
    criterion(12, "same seed gives byte-identical machine reports", ra == rb && !ra.is_empty());
}
