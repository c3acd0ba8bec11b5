//! The named checks of the double-cover suite, run per case.

use std::collections::HashMap;

use num_traits::Zero;

use crate::linalg::RatMatrix;
use crate::membership::{find_certificate, GeneratorSet};
use crate::parse::parse_poly_env;
use crate::pfaffian::{line_quadric_profile, plucker_values, wedge2, PAIRS};
use crate::rational::{rat, rat_i, Rat};
use crate::report::{CheckResult, RunCtx};
use crate::ring::{Degree, Poly, PolyMap, WeightedRing};
use crate::sample::{check_rng, sample_rat};

use super::data::{q_at, CaseTag, FiberShape, TypeIRCase};

fn id(case: &TypeIRCase, leaf: &str) -> String {
    format!("typeIR.{}.{}", case.tag.as_str(), leaf)
}

pub fn check_build(case: &TypeIRCase, _ctx: &RunCtx) -> Vec<CheckResult> {
    // invariants were validated during construction
    vec![CheckResult::pass(
        &id(case, "build"),
        "quadric family, contraction s(x, r), cover coordinates, scroll generators constructed; Plücker vanishing and weighted homogeneity validated",
    )]
}

// ---------------------------------------------------------------------------
// the Veronese-type image
// ---------------------------------------------------------------------------

pub fn check_veronese_image(case: &TypeIRCase, ctx: &RunCtx) -> Vec<CheckResult> {
    let mut out = Vec::new();
    // (a) symbolic Plücker vanishing was asserted at build; re-derive here
    let entries: Vec<Poly> = PAIRS.iter().map(|ij| case.q[ij].clone()).collect();
    let skew = crate::pfaffian::SkewPolyMatrix5::new(&case.cone_ring, entries).unwrap();
    let plucker_zero = skew.plucker().is_zero();

    // (b) the special-case quadric identity (q12 + q34)^2 = 4 q13 q24
    let quadric_identity = match case.tag {
        CaseTag::Special => {
            let lhs = (case.q[&(1, 2)].add_ref(&case.q[&(3, 4)])).pow(2);
            let rhs = (case.q[&(1, 3)].mul_ref(&case.q[&(2, 4)])).scale_i(4);
            lhs == rhs
        }
        CaseTag::General => true,
    };
    out.push(CheckResult::from_bool(
        &id(case, "veronese.identities"),
        plucker_zero && quadric_identity,
        match case.tag {
            CaseTag::Special => "plucker(q(x)) = 0 symbolically; (q12+q34)^2 - 4 q13 q24 = 0 exactly",
            CaseTag::General => "plucker(q(x)) = 0 symbolically",
        },
    ));

    // (c)/(d): the recovered lines against the quadric
    let mut rng = check_rng(ctx.seed, &id(case, "veronese.lines"));
    let mut ok = true;
    let mut produced = 0usize;
    let mut attempts = 0usize;
    let mut classes: Vec<&'static str> = Vec::new();
    while produced < ctx.trials && attempts < ctx.trials * 100 {
        attempts += 1;
        let x: [Rat; 4] = std::array::from_fn(|_| sample_rat(&mut rng));
        let r = q_at(case, &x);
        if r.iter().all(|v| v.is_zero()) {
            continue;
        }
        let profile = match line_quadric_profile(&r, &case.quadric, &case.hyperplanes) {
            Ok(p) => p,
            Err(_) => {
                ok = false;
                break;
            }
        };
        use crate::pfaffian::LineQuadricProfile::*;
        let fine = match case.tag {
            CaseTag::General => profile == Contained,
            CaseTag::Special => matches!(profile, Tangent | Contained),
        };
        if !fine {
            ok = false;
        }
        if !classes.contains(&profile.as_str()) {
            classes.push(profile.as_str());
        }
        produced += 1;
    }
    out.push(CheckResult::from_bool(
        &id(case, "veronese.lines"),
        ok && produced == ctx.trials,
        format!(
            "{} sampled base points: recovered lines are {} (classes seen: {:?})",
            produced,
            match case.tag {
                CaseTag::General => "contained in the smooth quadric",
                CaseTag::Special => "tangent to or contained in the quadric surface",
            },
            classes
        ),
    ));
    out
}

// ---------------------------------------------------------------------------
// the double cover
// ---------------------------------------------------------------------------

pub fn check_double_cover(case: &TypeIRCase, _ctx: &RunCtx) -> Vec<CheckResult> {
    let st = Poly::var(&case.rs_ring, "st").unwrap();
    let (identity_holds, note) = match case.tag {
        CaseTag::General => {
            let lhs = case.cover.scale_i(4);
            let rhs = case.branch_quartic.add_ref(&st.pow(2));
            (lhs == rhs, "4*(cover) = branch quartic + st^2, exactly")
        }
        CaseTag::Special => {
            let lhs = case.cover.scale_i(4);
            let rhs = case.branch_quartic.scale_i(4).add_ref(&st.pow(2));
            (lhs == rhs, "4*(cover) = 4*(branch quartic) + st^2, exactly")
        }
    };
    // specialization at st = 0
    let kill_s = {
        let mut assignment = Vec::new();
        for i in 0..case.rs_ring.arity() {
            let name = case.rs_ring.symbol(i).as_str();
            if name == "st" {
                assignment.push(Poly::zero(&case.rs_ring));
            } else {
                assignment.push(Poly::var_ix(&case.rs_ring, i));
            }
        }
        PolyMap::new(&case.rs_ring, &case.rs_ring, assignment).unwrap()
    };
    let specialized = case.cover.substitute(&kill_s).unwrap();
    let expect = match case.tag {
        CaseTag::General => case.branch_quartic.scale(&rat(1, 4)),
        CaseTag::Special => case.branch_quartic.clone(),
    };
    let s0_ok = specialized == expect;
    vec![CheckResult::from_bool(
        &id(case, "double_cover"),
        identity_holds && s0_ok,
        format!("{note}; st = 0 specialization agrees (sign as computed)"),
    )]
}

// ---------------------------------------------------------------------------
// the five relations on the cone
// ---------------------------------------------------------------------------

pub fn check_univ_relations(case: &TypeIRCase, ctx: &RunCtx) -> Vec<CheckResult> {
    let gens = GeneratorSet::new(case.cone_gens.to_vec()).unwrap();
    let mut all_ok = true;
    let mut witness = String::new();
    for (k, target) in case.univ3.iter().enumerate() {
        match find_certificate(target, &gens, ctx.degree_bound).unwrap() {
            Some(c) => {
                if k == 0 {
                    witness = c.to_text();
                }
            }
            None => {
                all_ok = false;
            }
        }
    }
    vec![CheckResult::from_bool(
        &id(case, "univ_relations"),
        all_ok,
        "all five incidence relations admit graded certificates over the centered Plücker ideal",
    )
    .with_witness(witness)]
}

/// The two printed systems coincide: substituting the cover coordinates into
/// the abstract incidence equations reproduces the cone relations exactly.
pub fn check_univ_consistency(case: &TypeIRCase, _ctx: &RunCtx) -> Vec<CheckResult> {
    let univ_ring = WeightedRing::new(&[
        ("x1", 1),
        ("x2", 1),
        ("x3", 1),
        ("x4", 1),
        ("m12", 4),
        ("m13", 4),
        ("m14", 4),
        ("m23", 4),
        ("m24", 4),
        ("m34", 4),
    ]);
    let empty = HashMap::new();
    let p = |s: &str| parse_poly_env(&univ_ring, &empty, s).unwrap();
    let univ = [
        p("x1*m23 - x2*m13 + x3*m12"),
        p("x1*m24 - x2*m14 + x4*m12"),
        p("x1*m34 - x3*m14 + x4*m13"),
        p("x2*m34 - x3*m24 + x4*m23"),
        p("m12*m34 - m13*m24 + m14*m23"),
    ];
    let to_cone = {
        let mut assignment = Vec::new();
        for i in 0..univ_ring.arity() {
            let name = univ_ring.symbol(i).as_str();
            let img = if name.starts_with('x') {
                Poly::var(&case.cone_ring, &name).unwrap()
            } else {
                case.m_cone[name.as_str()].clone()
            };
            assignment.push(img);
        }
        PolyMap::new(&univ_ring, &case.cone_ring, assignment).unwrap()
    };
    let ok = univ
        .iter()
        .zip(case.univ3.iter())
        .all(|(u, v)| &u.substitute(&to_cone).unwrap() == v);
    vec![CheckResult::from_bool(
        &id(case, "univ_consistency"),
        ok,
        "the abstract incidence system specializes exactly to the five cone relations",
    )]
}

// ---------------------------------------------------------------------------
// the relative model and its contraction
// ---------------------------------------------------------------------------

pub fn check_gtilde_and_psi(case: &TypeIRCase, ctx: &RunCtx) -> Vec<CheckResult> {
    let mut out = Vec::new();

    // (a) bi-homogeneity for the scroll weight table
    let mut bidegs = Vec::new();
    let mut homog_ok = true;
    for (k, g) in case.univ1_gens.iter().chain(case.rq_gens.iter()).enumerate() {
        let d1 = g.degree_with(&case.fir_weight_rows[0]);
        let d2 = g.degree_with(&case.fir_weight_rows[1]);
        match (d1, d2) {
            (Degree::Homogeneous(a), Degree::Homogeneous(b)) => {
                bidegs.push(format!("g{}:({a},{b})", k + 1))
            }
            _ => {
                homog_ok = false;
                bidegs.push(format!("g{}: NOT bi-homogeneous", k + 1));
            }
        }
    }
    out.push(CheckResult::from_bool(
        &id(case, "gtilde.weights"),
        homog_ok,
        format!("bidegrees {}", bidegs.join(", ")),
    ));

    // (b) pulled-back cone generators land in the scroll ideal
    let psi = {
        let mut assignment = Vec::new();
        for i in 0..case.cone_ring.arity() {
            let name = case.cone_ring.symbol(i).as_str();
            let img = if name.starts_with('x') {
                Poly::var(&case.scroll_ring, &format!("xt{}", &name[1..])).unwrap()
            } else {
                let w = Poly::var(&case.scroll_ring, "w").unwrap();
                w * Poly::var(&case.scroll_ring, &format!("rt{}", &name[1..])).unwrap()
            };
            assignment.push(img);
        }
        PolyMap::new(&case.cone_ring, &case.scroll_ring, assignment).unwrap()
    };
    let mut scroll_gens: Vec<Poly> = case.univ1_gens.to_vec();
    scroll_gens.extend(case.rq_gens.to_vec());
    let image_set = GeneratorSet::new(scroll_gens).unwrap();
    let source_set = GeneratorSet::new(case.cone_gens.to_vec()).unwrap();
    let certs =
        crate::membership::map_preserves(&psi, &source_set, &image_set, ctx.degree_bound).unwrap();
    out.push(CheckResult::from_bool(
        &id(case, "gtilde.psi_pullback"),
        certs.is_some(),
        "the five pulled-back cone equations lie in the scroll ideal (certified)",
    ));

    // (c) the section property on the unit-cone-coordinate chart
    let mut rng = check_rng(ctx.seed, &id(case, "gtilde.psi_section"));
    let mut section_ok = true;
    let mut produced = 0usize;
    let mut attempts = 0usize;
    while produced < ctx.trials && attempts < 300 * ctx.trials {
        attempts += 1;
        // a cone point: r := u ∧ v - q(x)
        let x: [Rat; 4] = std::array::from_fn(|_| sample_rat(&mut rng));
        let u: [Rat; 5] = std::array::from_fn(|_| sample_rat(&mut rng));
        let v: [Rat; 5] = std::array::from_fn(|_| sample_rat(&mut rng));
        let wuv = wedge2(&u, &v);
        let qv = q_at(case, &x);
        let r: Vec<Rat> = (0..10).map(|k| wuv[k].clone() - qv[k].clone()).collect();
        // cone-point sanity
        let mut cone_pt = vec![Rat::zero(); case.cone_ring.arity()];
        cone_pt[..4].clone_from_slice(&x);
        cone_pt[4..14].clone_from_slice(&r);
        if !case
            .cone_gens
            .iter()
            .all(|g| g.evaluate(&cone_pt).unwrap().is_zero())
        {
            section_ok = false;
            break;
        }
        let sval = case.s_poly.evaluate(&cone_pt).unwrap();
        // the section: (rt, st; xt, w) = (r, s(x, r); x, 1)
        let mut sc_pt = vec![Rat::zero(); case.scroll_ring.arity()];
        sc_pt[..10].clone_from_slice(&r);
        sc_pt[10] = sval;
        sc_pt[11..15].clone_from_slice(&x);
        sc_pt[15] = rat_i(1);
        let on_scroll = case
            .univ1_gens
            .iter()
            .chain(case.rq_gens.iter())
            .all(|g| g.evaluate(&sc_pt).unwrap().is_zero());
        if !on_scroll {
            section_ok = false;
        }
        produced += 1;
    }
    out.push(CheckResult::from_bool(
        &id(case, "gtilde.psi_section"),
        section_ok && produced == ctx.trials,
        format!("{produced} sampled cone points lift to the scroll through (r, s(x, r); x, 1)"),
    ));
    out
}

// ---------------------------------------------------------------------------
// fibers over orbit representatives
// ---------------------------------------------------------------------------

/// Fiber generators over a representative: all ten scroll equations with the
/// rt-block frozen at the representative and st = 0, keeping the nonzero
/// ones (in the fiber ring).
fn fiber_generators(case: &TypeIRCase, rep: &[i64; 10]) -> Vec<Poly> {
    let fr = &case.fiber_ring;
    let mut assignment = Vec::new();
    for i in 0..case.scroll_ring.arity() {
        let name = case.scroll_ring.symbol(i).as_str();
        let img = if let Some(pos) = PAIRS
            .iter()
            .position(|(a, b)| name == format!("rt{a}{b}"))
        {
            Poly::constant(fr, rat_i(rep[pos]))
        } else if name == "st" {
            Poly::zero(fr)
        } else {
            Poly::var(fr, &name).unwrap()
        };
        assignment.push(img);
    }
    let freeze = PolyMap::new(&case.scroll_ring, fr, assignment).unwrap();
    case.univ1_gens
        .iter()
        .chain(case.rq_gens.iter())
        .map(|g| g.substitute(&freeze).unwrap())
        .filter(|g| !g.is_zero())
        .collect()
}

/// Gram matrix of a quadratic form in the four base variables.
fn gram_of_quadric(fr: &crate::ring::Ring, g: &Poly) -> Option<RatMatrix> {
    let mut m = RatMatrix::zero(4, 4);
    for (mono, c) in g.terms() {
        if mono.0[4] != 0 {
            return None; // involves the cone coordinate
        }
        let mut support: Vec<usize> = Vec::new();
        for (ix, e) in mono.0.iter().take(4).enumerate() {
            for _ in 0..*e {
                support.push(ix);
            }
        }
        if support.len() != 2 {
            return None;
        }
        let (i, j) = (support[0], support[1]);
        if i == j {
            m[(i, i)] = c.clone();
        } else {
            let half = c.clone() * rat(1, 2);
            m[(i, j)] = half.clone();
            m[(j, i)] = half;
        }
    }
    let _ = fr;
    Some(m)
}

pub fn check_fibers(case: &TypeIRCase, ctx: &RunCtx) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let fr = &case.fiber_ring;
    let empty = HashMap::new();
    for fiber in &case.fibers {
        let check_id = format!("{}.{}", id(case, "fibers"), fiber.name);
        // the representative lies on the double cover: with st = 0 the cover
        // equation evaluates to the product of the frozen Pfaffian pieces
        let rep_rat: [Rat; 10] = std::array::from_fn(|k| rat_i(fiber.rep[k]));
        let pf = plucker_values(&rep_rat);
        let cover_val = match case.tag {
            CaseTag::General => {
                (pf[4].clone() * pf[3].clone() + pf[1].clone() * pf[2].clone()) * rat_i(4)
                    - pf[0].clone() * pf[0].clone()
            }
            CaseTag::Special => pf[4].clone() * pf[3].clone() + pf[1].clone() * pf[2].clone(),
        };
        if !cover_val.is_zero() {
            out.push(CheckResult::fail(
                &check_id,
                "representative does not lie on the double cover",
            ));
            continue;
        }
        let gens = fiber_generators(case, &fiber.rep);
        if gens.is_empty() {
            out.push(CheckResult::fail(&check_id, "empty fiber system"));
            continue;
        }
        match &fiber.shape {
            FiberShape::LinearComponents(components) => {
                let comp_forms: Vec<Vec<Poly>> = components
                    .iter()
                    .map(|forms| {
                        forms
                            .iter()
                            .map(|f| parse_poly_env(fr, &empty, f).unwrap())
                            .collect()
                    })
                    .collect();
                // (i) each component parametrization kills every generator
                let mut vanish_ok = true;
                let mut samplers: Vec<Vec<Vec<Rat>>> = Vec::new(); // per component: basis of x-part
                for forms in &comp_forms {
                    // coefficient matrix of the forms on xt1..xt4
                    let mut rows = Vec::new();
                    for f in forms {
                        let mut row = vec![Rat::zero(); 4];
                        for (mono, c) in f.terms() {
                            let ix = (0..4).find(|&i| mono.0[i] == 1).unwrap();
                            row[ix] = c.clone();
                        }
                        rows.push(row);
                    }
                    let basis = RatMatrix::from_rows(rows).nullspace();
                    // parametrization: xt = sum params * basis, w free
                    let nparams = basis.len() + 1;
                    let pvars: Vec<(String, u64)> =
                        (0..nparams).map(|k| (format!("t{k}"), 1)).collect();
                    let prefs: Vec<(&str, u64)> =
                        pvars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
                    let pring = WeightedRing::new(&prefs);
                    let mut assignment = Vec::new();
                    for i in 0..4 {
                        let mut acc = Poly::zero(&pring);
                        for (bk, b) in basis.iter().enumerate() {
                            acc = acc
                                + Poly::var(&pring, &format!("t{bk}"))
                                    .unwrap()
                                    .scale(&b[i]);
                        }
                        assignment.push(acc);
                    }
                    assignment.push(Poly::var(&pring, &format!("t{}", nparams - 1)).unwrap());
                    let param = PolyMap::new(fr, &pring, assignment).unwrap();
                    for g in &gens {
                        if !g.substitute(&param).unwrap().is_zero() {
                            vanish_ok = false;
                        }
                    }
                    samplers.push(basis);
                }
                // (ii) the exact converse: each product of one defining form
                // per component has a power in the fiber ideal
                let gen_set = GeneratorSet::new(gens.clone()).unwrap();
                let mut converse_ok = true;
                let mut tuples: Vec<Poly> = vec![Poly::one(fr)];
                for forms in &comp_forms {
                    let mut next = Vec::new();
                    for t in &tuples {
                        for f in forms {
                            next.push(t.mul_ref(f));
                        }
                    }
                    tuples = next;
                }
                let mut max_power = 0u32;
                for t in &tuples {
                    let mut found = false;
                    for e in 1..=3u32 {
                        if find_certificate(&t.pow(e), &gen_set, ctx.degree_bound).unwrap().is_some() {
                            found = true;
                            max_power = max_power.max(e);
                            break;
                        }
                    }
                    if !found {
                        converse_ok = false;
                    }
                }
                // (iii) seeded samples on the components satisfy the system
                let mut rng = check_rng(ctx.seed, &check_id);
                let mut sample_ok = true;
                for _ in 0..ctx.trials {
                    let comp_ix =
                        (sample_rat(&mut rng).numer().clone().to_string().len()) % samplers.len();
                    let basis = &samplers[comp_ix];
                    let mut pt = vec![Rat::zero(); 5];
                    for b in basis {
                        let lam = sample_rat(&mut rng);
                        for i in 0..4 {
                            let add = lam.clone() * b[i].clone();
                            pt[i] += add;
                        }
                    }
                    pt[4] = sample_rat(&mut rng);
                    if !gens.iter().all(|g| g.evaluate(&pt).unwrap().is_zero()) {
                        sample_ok = false;
                    }
                }
                out.push(CheckResult::from_bool(
                    &check_id,
                    vanish_ok && converse_ok && sample_ok,
                    format!(
                        "{}: component vanishing symbolic; converse by radical certificates (power <= {max_power}); {} seeded samples",
                        fiber.descr, ctx.trials
                    ),
                ));
            }
            FiberShape::QuadricCone => {
                // all generators proportional to one quadric of Gram rank 4
                let lead = gens[0].clone();
                let all_prop = gens
                    .iter()
                    .all(|g| crate::membership::scalar_ratio(g, &lead).is_some());
                let gram_rank = gram_of_quadric(fr, &lead).map(|g| g.rank());
                // seeded rational points on the cone via the two-squares identity
                let mut rng = check_rng(ctx.seed, &check_id);
                let mut sample_ok = true;
                for _ in 0..ctx.trials {
                    let (a, b, c, dd) = (
                        sample_rat(&mut rng),
                        sample_rat(&mut rng),
                        sample_rat(&mut rng),
                        sample_rat(&mut rng),
                    );
                    // x1^2 + x3^2 = x2^2 + x4^2 via (ac-bd, ad+bc | ac+bd, ad-bc)
                    let x1 = a.clone() * c.clone() - b.clone() * dd.clone();
                    let x3 = a.clone() * dd.clone() + b.clone() * c.clone();
                    let x2 = a.clone() * c.clone() + b.clone() * dd.clone();
                    let x4 = a.clone() * dd.clone() - b.clone() * c.clone();
                    let pt = vec![x1, x2, x3, x4, sample_rat(&mut rng)];
                    if !gens.iter().all(|g| g.evaluate(&pt).unwrap().is_zero()) {
                        sample_ok = false;
                    }
                }
                out.push(CheckResult::from_bool(
                    &check_id,
                    all_prop && gram_rank == Some(4) && sample_ok,
                    format!(
                        "{}: single quadric generator, Gram rank {:?}; {} rational cone points satisfy the system",
                        fiber.descr, gram_rank, ctx.trials
                    ),
                ));
            }
            FiberShape::Graph => {
                // a single generator, linear in w with constant coefficient
                let ok_shape = gens.len() == 1 && {
                    let g = &gens[0];
                    let w_ix = 4;
                    let mut w_coeff = Poly::zero(fr);
                    let mut max_w = 0u16;
                    for (mono, c) in g.terms() {
                        max_w = max_w.max(mono.0[w_ix]);
                        if mono.0[w_ix] == 1 {
                            let mut m2 = mono.clone();
                            m2.0[w_ix] = 0;
                            w_coeff = w_coeff + Poly::from_terms(fr, [(m2, c.clone())]);
                        }
                    }
                    max_w == 1 && w_coeff.is_constant() && !w_coeff.is_zero()
                };
                // sample: pick the base freely and solve for the cone coord
                let mut rng = check_rng(ctx.seed, &check_id);
                let mut sample_ok = ok_shape;
                if ok_shape {
                    let g = &gens[0];
                    for _ in 0..ctx.trials {
                        let base: [Rat; 4] = std::array::from_fn(|_| sample_rat(&mut rng));
                        // g = c*w + h(x): w = -h/c
                        let mut pt = vec![
                            base[0].clone(),
                            base[1].clone(),
                            base[2].clone(),
                            base[3].clone(),
                            Rat::zero(),
                        ];
                        let h = g.evaluate(&pt).unwrap();
                        pt[4] = rat_i(1);
                        let c_plus_h = g.evaluate(&pt).unwrap();
                        let c = c_plus_h - h.clone();
                        pt[4] = -h / c;
                        if !g.evaluate(&pt).unwrap().is_zero() {
                            sample_ok = false;
                        }
                    }
                }
                out.push(CheckResult::from_bool(
                    &check_id,
                    ok_shape && sample_ok,
                    format!(
                        "{}: one generator, linear in the cone coordinate with unit coefficient; {} graph samples",
                        fiber.descr, ctx.trials
                    ),
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// orbit representatives
// ---------------------------------------------------------------------------

pub fn check_orbit_reps(case: &TypeIRCase, _ctx: &RunCtx) -> Vec<CheckResult> {
    let mut all_ok = true;
    let mut lines = Vec::new();
    for rep in &case.orbit_reps {
        let r: [Rat; 10] = std::array::from_fn(|k| rat_i(rep.rep[k]));
        // decomposability
        if !plucker_values(&r).iter().all(|v| v.is_zero()) {
            all_ok = false;
            lines.push(format!("{}: not decomposable", rep.name));
            continue;
        }
        match line_quadric_profile(&r, &case.quadric, &case.hyperplanes) {
            Ok(profile) => {
                let hit = profile == rep.expected;
                if !hit {
                    all_ok = false;
                }
                lines.push(format!(
                    "{}: {} (expected {}){}",
                    rep.name,
                    profile.as_str(),
                    rep.expected.as_str(),
                    if hit { "" } else { " MISMATCH" }
                ));
            }
            Err(e) => {
                all_ok = false;
                lines.push(format!("{}: {e}", rep.name));
            }
        }
    }
    vec![CheckResult::from_bool(
        &id(case, "orbits"),
        all_ok,
        lines.join("; "),
    )]
}

// ---------------------------------------------------------------------------
// the user-instance hook: six linear forms cutting a 3-space
// ---------------------------------------------------------------------------

/// Config for the hook: six linear forms as variable-name -> coefficient
/// maps over rt12..rt45, and optionally five claimed special points.
#[derive(Debug, serde::Deserialize)]
pub struct LFormsConfig {
    pub case: String,
    pub forms: Vec<HashMap<String, String>>,
    #[serde(default)]
    pub points: Vec<Vec<String>>,
}

pub fn check_lforms(case: &TypeIRCase, cfg: &LFormsConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let check_id = id(case, "lforms");
    if cfg.forms.len() != 6 {
        return vec![CheckResult::fail(
            &check_id,
            format!("expected 6 linear forms, got {}", cfg.forms.len()),
        )];
    }
    // coefficient rows over the ten Plücker coordinates
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for form in &cfg.forms {
        let mut row = vec![Rat::zero(); 10];
        for (name, value) in form {
            let Some(pos) = PAIRS
                .iter()
                .position(|(i, j)| name == &format!("r{i}{j}") || name == &format!("rt{i}{j}"))
            else {
                return vec![CheckResult::fail(
                    &check_id,
                    format!("unknown coordinate `{name}` in form"),
                )];
            };
            let Some(v) = crate::rational::parse_rat(value) else {
                return vec![CheckResult::fail(
                    &check_id,
                    format!("bad rational `{value}`"),
                )];
            };
            row[pos] = v;
        }
        rows.push(row);
    }
    let m = RatMatrix::from_rows(rows.clone());
    let independent = m.rank() == 6;
    out.push(CheckResult::from_bool(
        &format!("{check_id}.independence"),
        independent,
        "the six forms are linearly independent (the cut is a 3-space)",
    ));
    if !independent {
        return out;
    }
    // restricted branch quartic is not identically zero: evaluate on the
    // nullspace parametrization at several points
    let basis = m.nullspace();
    let mut nonzero = false;
    for trial in 0..50 {
        let mut r = vec![Rat::zero(); 10];
        for (k, b) in basis.iter().enumerate() {
            let lam = rat_i(((trial + 2) * (k + 1)) as i64 % 7 - 3);
            for i in 0..10 {
                let add = lam.clone() * b[i].clone();
                r[i] += add;
            }
        }
        let mut pt = vec![Rat::zero(); case.rs_ring.arity()];
        pt[..10].clone_from_slice(&r);
        if !case.branch_quartic.evaluate(&pt).unwrap().is_zero() {
            nonzero = true;
            break;
        }
    }
    out.push(CheckResult::from_bool(
        &format!("{check_id}.branch_nonzero"),
        nonzero,
        "the branch quartic does not vanish identically on the 3-space",
    ));
    if cfg.points.is_empty() {
        out.push(CheckResult::inconclusive(
            &format!("{check_id}.points"),
            "no candidate special points supplied; the five-point and singularity conditions were not verified",
        ));
        return out;
    }
    let mut pts_ok = cfg.points.len() == 5;
    let mut notes = Vec::new();
    for (k, praw) in cfg.points.iter().enumerate() {
        if praw.len() != 10 {
            pts_ok = false;
            notes.push(format!("point {k}: expected 10 coordinates"));
            continue;
        }
        let Some(r): Option<Vec<Rat>> =
            praw.iter().map(|s| crate::rational::parse_rat(s)).collect()
        else {
            pts_ok = false;
            notes.push(format!("point {k}: bad rational"));
            continue;
        };
        // on the 3-space?
        let on_l = rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&r)
                    .map(|(a, b)| a.clone() * b.clone())
                    .sum::<Rat>()
            })
            .all(|v| v.is_zero());
        // on the Grassmannian cone?
        let arr: [Rat; 10] = r.clone().try_into().unwrap();
        let on_g = plucker_values(&arr).iter().all(|v| v.is_zero());
        if !(on_l && on_g) {
            pts_ok = false;
            notes.push(format!(
                "point {k}: on 3-space: {on_l}, decomposable: {on_g}"
            ));
        }
    }
    out.push(CheckResult::from_bool(
        &format!("{check_id}.points"),
        pts_ok,
        if notes.is_empty() {
            "all five supplied points lie on the 3-space and on the Plücker cone".to_string()
        } else {
            notes.join("; ")
        },
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn ctx() -> RunCtx {
        RunCtx {
            seed: 1,
            trials: 4,
            degree_bound: 4,
        }
    }

    #[test]
    fn veronese_both_cases() {
        for case in [super::super::general(), super::super::special()] {
            let res = check_veronese_image(case, &ctx());
            assert!(res.iter().all(|r| r.status == Status::Pass), "{res:?}");
        }
    }

    #[test]
    fn double_cover_identities() {
        for case in [super::super::general(), super::super::special()] {
            let res = check_double_cover(case, &ctx());
            assert!(res.iter().all(|r| r.status == Status::Pass), "{res:?}");
        }
    }

    #[test]
    fn univ_consistency_both_cases() {
        for case in [super::super::general(), super::super::special()] {
            let res = check_univ_consistency(case, &ctx());
            assert!(res.iter().all(|r| r.status == Status::Pass), "{res:?}");
        }
    }

    #[test]
    fn orbit_profiles() {
        for case in [super::super::general(), super::super::special()] {
            let res = check_orbit_reps(case, &ctx());
            assert!(res.iter().all(|r| r.status == Status::Pass), "{res:?}");
        }
    }

    #[test]
    fn fibers_both_cases() {
        for case in [super::super::general(), super::super::special()] {
            let res = check_fibers(case, &ctx());
            assert!(res.iter().all(|r| r.status == Status::Pass), "{res:?}");
        }
    }
}
