//! Construction of the two double-cover cases.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::parse::parse_poly_env;
use crate::pfaffian::{LineQuadricProfile, SkewPolyMatrix5, PAIRS, PLUCKER_INDEX_SETS};
use crate::rational::{rat, rat_i, Rat};
use crate::ring::{Degree, Poly, Ring, WeightedRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    General,
    Special,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::General => "general",
            CaseTag::Special => "special",
        }
    }
}

/// What a fiber over an orbit representative is claimed to look like.
pub enum FiberShape {
    /// A union of linear subspaces of the base, each given by its defining
    /// linear forms in the fiber ring (the cone coordinate stays free).
    /// Multiplicity claims are recorded set-theoretically.
    LinearComponents(Vec<Vec<&'static str>>),
    /// A single irreducible quadric cone: one generator up to scalar, with
    /// full-rank Gram matrix on the base coordinates.
    QuadricCone,
    /// The graph of the cone coordinate over the base: one generator,
    /// linear in `w` with constant coefficient.
    Graph,
}

pub struct FiberCase {
    pub name: &'static str,
    /// The representative in pair order (12, 13, 14, 15, 23, 24, 25, 34, 35, 45).
    pub rep: [i64; 10],
    pub shape: FiberShape,
    pub descr: &'static str,
}

pub struct OrbitRep {
    pub name: &'static str,
    pub rep: [i64; 10],
    pub expected: LineQuadricProfile,
}

pub struct TypeIRCase {
    pub tag: CaseTag,
    /// x1..x4 weight 1, r12..r45 weight 2.
    pub cone_ring: Ring,
    pub q: HashMap<(usize, usize), Poly>,
    /// The odd contraction s(x, r), weight 4.
    pub s_poly: Poly,
    /// The six double-cover coordinates with s(x, r) substituted.
    pub m_cone: HashMap<&'static str, Poly>,
    /// Plücker relations of the centered matrix A(r + q(x)).
    pub cone_gens: [Poly; 5],
    /// The five relations satisfied by cone points.
    pub univ3: [Poly; 5],

    /// rt12..rt45 weight 1, st weight 2 — the double-cover ambient.
    pub rs_ring: Ring,
    pub cover: Poly,
    pub branch_quartic: Poly,

    /// rt12..rt45, st, xt1..xt4, w — the relative-model scroll.
    pub scroll_ring: Ring,
    pub univ1_gens: [Poly; 5],
    pub rq_gens: [Poly; 5],
    pub fir_weight_rows: [Vec<i64>; 2],

    /// xt1..xt4 weight 1, w weight 2 — where fibers live.
    pub fiber_ring: Ring,
    pub fibers: Vec<FiberCase>,
    pub orbit_reps: Vec<OrbitRep>,

    /// p1..p5 weight 1; the quadric the case's lines are profiled against,
    /// and the hyperplane stack cutting it to a surface (special case only).
    pub p_ring: Ring,
    pub quadric: Poly,
    pub hyperplanes: Vec<Poly>,
}

/// The Veronese-type quadric entries of each case, on variables `x1..x4`
/// of `ring` (as strings for auditability).
fn q_formulas(tag: CaseTag) -> [(usize, usize, &'static str); 10] {
    match tag {
        CaseTag::General => [
            (1, 2, "-x1*x4 - x2*x3"),
            (1, 3, "-x3^2"),
            (1, 4, "x4^2"),
            (1, 5, "x3*x4"),
            (2, 3, "x1^2"),
            (2, 4, "-x2^2"),
            (2, 5, "x1*x2"),
            (3, 4, "x1*x4 - x2*x3"),
            (3, 5, "x1*x3"),
            (4, 5, "-x2*x4"),
        ],
        CaseTag::Special => [
            (1, 2, "-x1*x4 - x2*x3"),
            (1, 3, "-x3^2"),
            (1, 4, "x4^2"),
            (1, 5, "0"),
            (2, 3, "x1^2"),
            (2, 4, "-x2^2"),
            (2, 5, "0"),
            (3, 4, "x1*x4 - x2*x3"),
            (3, 5, "0"),
            (4, 5, "0"),
        ],
    }
}

fn s_formula(tag: CaseTag) -> &'static str {
    match tag {
        CaseTag::General => {
            "(x1*x4 + x2*x3)*r12 - x2^2*r13 + x1^2*r14 + 2*x1*x2*r15 \
             + x4^2*r23 - x3^2*r24 + 2*x3*x4*r25 + (x2*x3 - x1*x4)*r34 \
             - 2*x2*x4*r35 + 2*x1*x3*r45"
        }
        CaseTag::Special => "2*(x1*x2*r15 + x3*x4*r25 - x2*x4*r35 + x1*x3*r45)",
    }
}

/// Pfaffians of the generic skew matrix on `prefix`-named entries of `ring`,
/// in the fixed order of `PLUCKER_INDEX_SETS`.
fn generic_pfaffians(ring: &Ring, prefix: &str) -> [Poly; 5] {
    let m = SkewPolyMatrix5::generic(ring, |i, j| format!("{prefix}{i}{j}")).unwrap();
    PLUCKER_INDEX_SETS
        .iter()
        .map(|idx| m.pfaffian4(*idx).unwrap())
        .collect::<Vec<_>>()
        .try_into()
        .unwrap()
}

/// The six double-cover coordinates m12, m13, m14, m23, m24, m34 given the
/// five Pfaffians (in fixed order) and the odd coordinate `s`.
fn m_family(tag: CaseTag, pf: &[Poly; 5], s: &Poly) -> HashMap<&'static str, Poly> {
    let mut m = HashMap::new();
    m.insert("m12", pf[4].clone()); // Pf_2345
    m.insert("m13", pf[1].neg_ref()); // -Pf_1235
    m.insert("m24", pf[2].clone()); // Pf_1245
    m.insert("m34", pf[3].clone()); // Pf_1345
    match tag {
        CaseTag::General => {
            let half = rat(1, 2);
            m.insert("m14", (s.sub_ref(&pf[0])).scale(&half)); // -(Pf_1234 - s)/2
            m.insert("m23", (pf[0].add_ref(s)).scale(&half)); // (Pf_1234 + s)/2
        }
        CaseTag::Special => {
            let half = rat(1, 2);
            m.insert("m14", s.scale(&half));
            m.insert("m23", s.scale(&half));
        }
    }
    m
}

/// The five incidence relations in terms of x1..x4 and a given m-family.
fn incidence_rows(ring: &Ring, m: &HashMap<&'static str, Poly>) -> [Poly; 5] {
    let x = |i: usize| Poly::var(ring, &format!("x{i}")).unwrap();
    [
        x(1) * &m["m23"] - x(2) * &m["m13"] + x(3) * &m["m12"],
        x(1) * &m["m24"] - x(2) * &m["m14"] + x(4) * &m["m12"],
        x(1) * &m["m34"] - x(3) * &m["m14"] + x(4) * &m["m13"],
        x(2) * &m["m34"] - x(3) * &m["m24"] + x(4) * &m["m23"],
        &m["m12"] * &m["m34"] - &m["m13"] * &m["m24"] + &m["m14"] * &m["m23"],
    ]
}

/// Same rows but with xt-named base variables (scroll ring).
fn incidence_rows_t(ring: &Ring, m: &HashMap<&'static str, Poly>) -> [Poly; 5] {
    let x = |i: usize| Poly::var(ring, &format!("xt{i}")).unwrap();
    [
        x(1) * &m["m23"] - x(2) * &m["m13"] + x(3) * &m["m12"],
        x(1) * &m["m24"] - x(2) * &m["m14"] + x(4) * &m["m12"],
        x(1) * &m["m34"] - x(3) * &m["m14"] + x(4) * &m["m13"],
        x(2) * &m["m34"] - x(3) * &m["m24"] + x(4) * &m["m23"],
        &m["m12"] * &m["m34"] - &m["m13"] * &m["m24"] + &m["m14"] * &m["m23"],
    ]
}

fn assert_homog(p: &Poly, d: i64, what: &str) {
    match p.weighted_degree() {
        Degree::Homogeneous(got) if got == d => {}
        Degree::Zero => {}
        other => panic!("{what}: expected weighted degree {d}, got {other:?}"),
    }
}

fn build(tag: CaseTag) -> TypeIRCase {
    // cone ring
    let mut vars: Vec<(String, u64)> = (1..=4).map(|i| (format!("x{i}"), 1)).collect();
    for (i, j) in PAIRS {
        vars.push((format!("r{i}{j}"), 2));
    }
    let refs: Vec<(&str, u64)> = vars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    let cone_ring = WeightedRing::new(&refs);

    let empty = HashMap::new();
    let q: HashMap<(usize, usize), Poly> = q_formulas(tag)
        .iter()
        .map(|(i, j, fml)| ((*i, *j), parse_poly_env(&cone_ring, &empty, fml).unwrap()))
        .collect();
    for ((i, j), p) in &q {
        assert_homog(p, 2, &format!("q{i}{j}"));
    }
    let s_poly = parse_poly_env(&cone_ring, &empty, s_formula(tag)).unwrap();
    assert_homog(&s_poly, 4, "s(x, r)");

    // invariant: the quadric family satisfies the five Plücker relations
    let q_entries: Vec<Poly> = PAIRS.iter().map(|ij| q[ij].clone()).collect();
    let q_skew = SkewPolyMatrix5::new(&cone_ring, q_entries.clone()).unwrap();
    assert!(
        q_skew.plucker().is_zero(),
        "{}: the quadric family violates a Plücker relation",
        tag.as_str()
    );

    let pf_cone = generic_pfaffians(&cone_ring, "r");
    let m_cone = m_family(tag, &pf_cone, &s_poly);
    for (name, p) in &m_cone {
        assert_homog(p, 4, name);
    }
    let univ3 = incidence_rows(&cone_ring, &m_cone);

    let r_entries: Vec<Poly> = PAIRS
        .iter()
        .map(|(i, j)| Poly::var(&cone_ring, &format!("r{i}{j}")).unwrap())
        .collect();
    let centered = crate::pfaffian::skew_from_sum(&cone_ring, &r_entries, &q_entries).unwrap();
    let cone_gens: [Poly; 5] = centered.plucker().into_vec().try_into().unwrap();
    for (k, g) in cone_gens.iter().enumerate() {
        assert_homog(g, 4, &format!("cone generator {k}"));
    }

    // the double-cover ambient
    let mut rs_vars: Vec<(String, u64)> = PAIRS.iter().map(|(i, j)| (format!("rt{i}{j}"), 1)).collect();
    rs_vars.push(("st".to_string(), 2));
    let rs_refs: Vec<(&str, u64)> = rs_vars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    let rs_ring = WeightedRing::new(&rs_refs);
    let pf_rs = generic_pfaffians(&rs_ring, "rt");
    let st = Poly::var(&rs_ring, "st").unwrap();
    let m_rs = m_family(tag, &pf_rs, &st);
    let cover = match tag {
        CaseTag::General => &m_rs["m12"] * &m_rs["m34"] - &m_rs["m13"] * &m_rs["m24"] + &m_rs["m14"] * &m_rs["m23"],
        CaseTag::Special => {
            &m_rs["m12"] * &m_rs["m34"] - &m_rs["m13"] * &m_rs["m24"] + m_rs["m23"].mul_ref(&m_rs["m23"])
        }
    };
    let branch_quartic = match tag {
        CaseTag::General => {
            (&pf_rs[4] * &pf_rs[3] + &pf_rs[1] * &pf_rs[2]).scale_i(4) - pf_rs[0].pow(2)
        }
        CaseTag::Special => &pf_rs[4] * &pf_rs[3] + &pf_rs[1] * &pf_rs[2],
    };

    // the scroll
    let mut sc_vars: Vec<(String, u64)> = PAIRS.iter().map(|(i, j)| (format!("rt{i}{j}"), 1)).collect();
    sc_vars.push(("st".into(), 2));
    for i in 1..=4 {
        sc_vars.push((format!("xt{i}"), 1));
    }
    sc_vars.push(("w".into(), 1));
    let sc_refs: Vec<(&str, u64)> = sc_vars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    let scroll_ring = WeightedRing::new(&sc_refs);
    let pf_sc = generic_pfaffians(&scroll_ring, "rt");
    let st_sc = Poly::var(&scroll_ring, "st").unwrap();
    let m_sc = m_family(tag, &pf_sc, &st_sc);
    let univ1_gens = incidence_rows_t(&scroll_ring, &m_sc);
    let qt: HashMap<(usize, usize), Poly> = q_formulas(tag)
        .iter()
        .map(|(i, j, fml)| {
            let fml_t = fml.replace('x', "xt");
            ((*i, *j), parse_poly_env(&scroll_ring, &empty, &fml_t).unwrap())
        })
        .collect();
    let w = Poly::var(&scroll_ring, "w").unwrap();
    let rq_gens: [Poly; 5] = PLUCKER_INDEX_SETS
        .iter()
        .enumerate()
        .map(|(k, idx)| {
            let rt = |i: usize, j: usize| {
                if i < j {
                    Poly::var(&scroll_ring, &format!("rt{i}{j}")).unwrap()
                } else {
                    Poly::var(&scroll_ring, &format!("rt{j}{i}")).unwrap().neg_ref()
                }
            };
            let qf = |i: usize, j: usize| {
                if i < j {
                    qt[&(i, j)].clone()
                } else {
                    qt[&(j, i)].neg_ref()
                }
            };
            crate::pfaffian::mixed_pfaffian_term(*idx, &rt, &qf) + w.mul_ref(&pf_sc[k])
        })
        .collect::<Vec<_>>()
        .try_into()
        .unwrap();
    // weight rows in scroll variable order: rt (10), st, xt (4), w
    let mut row1: Vec<i64> = vec![1; 10];
    row1.push(2);
    row1.extend([0, 0, 0, 0]);
    row1.push(-1);
    let mut row2: Vec<i64> = vec![0; 10];
    row2.push(0);
    row2.extend([1, 1, 1, 1]);
    row2.push(2);
    let fir_weight_rows = [row1, row2];

    let fiber_ring = WeightedRing::new(&[("xt1", 1), ("xt2", 1), ("xt3", 1), ("xt4", 1), ("w", 2)]);

    let pair_ix = |i: usize, j: usize| PAIRS.iter().position(|p| *p == (i, j)).unwrap();
    let rep_of = |entries: &[((usize, usize), i64)]| -> [i64; 10] {
        let mut r = [0i64; 10];
        for ((i, j), v) in entries {
            r[pair_ix(*i, *j)] = *v;
        }
        r
    };

    let (fibers, orbit_reps) = match tag {
        CaseTag::General => (
            vec![
                FiberCase {
                    name: "r12",
                    rep: rep_of(&[((1, 2), 1)]),
                    shape: FiberShape::LinearComponents(vec![
                        vec!["xt1", "xt2"],
                        vec!["xt3", "xt4"],
                    ]),
                    descr: "pair of planes meeting at the cone point",
                },
                FiberCase {
                    name: "r45",
                    rep: rep_of(&[((4, 5), 1)]),
                    shape: FiberShape::LinearComponents(vec![vec!["xt1", "xt3"]]),
                    descr: "one plane, set-theoretically (doubled scheme structure not checked)",
                },
                FiberCase {
                    name: "r23",
                    rep: rep_of(&[((2, 3), 1)]),
                    shape: FiberShape::LinearComponents(vec![vec!["xt4"]]),
                    descr: "one hyperplane",
                },
            ],
            vec![
                OrbitRep {
                    name: "r12",
                    rep: rep_of(&[((1, 2), 1)]),
                    expected: LineQuadricProfile::TwoPoints,
                },
                OrbitRep {
                    name: "r45",
                    rep: rep_of(&[((4, 5), 1)]),
                    expected: LineQuadricProfile::Tangent,
                },
                OrbitRep {
                    name: "r23",
                    rep: rep_of(&[((2, 3), 1)]),
                    expected: LineQuadricProfile::Contained,
                },
            ],
        ),
        CaseTag::Special => (
            vec![
                FiberCase {
                    name: "a",
                    rep: rep_of(&[((1, 5), 1), ((2, 5), -1)]),
                    shape: FiberShape::LinearComponents(vec![
                        vec!["xt1 - xt3", "xt2 - xt4"],
                        vec!["xt1 + xt3", "xt2 + xt4"],
                    ]),
                    descr: "pair of planes meeting at the cone point",
                },
                FiberCase {
                    name: "b",
                    rep: rep_of(&[((1, 5), 1)]),
                    shape: FiberShape::LinearComponents(vec![vec!["xt1", "xt2"]]),
                    descr: "one plane, set-theoretically",
                },
                FiberCase {
                    name: "c",
                    rep: rep_of(&[((1, 3), 1), ((1, 4), -1), ((2, 3), 1), ((2, 4), -1)]),
                    shape: FiberShape::QuadricCone,
                    descr: "quadric cone over a smooth quadric surface",
                },
                FiberCase {
                    name: "d",
                    rep: rep_of(&[((1, 3), 1), ((2, 3), -1)]),
                    shape: FiberShape::LinearComponents(vec![vec!["xt2 - xt4"], vec!["xt2 + xt4"]]),
                    descr: "pair of hyperplanes",
                },
                FiberCase {
                    name: "e",
                    rep: rep_of(&[((1, 3), 1)]),
                    shape: FiberShape::LinearComponents(vec![vec!["xt2"]]),
                    descr: "one hyperplane, set-theoretically",
                },
                FiberCase {
                    name: "f",
                    rep: rep_of(&[((1, 2), 1), ((3, 4), 1)]),
                    shape: FiberShape::Graph,
                    descr: "graph of the cone coordinate over the base 3-space",
                },
            ],
            vec![
                OrbitRep {
                    name: "a",
                    rep: rep_of(&[((1, 5), 1), ((2, 5), -1)]),
                    expected: LineQuadricProfile::Disjoint,
                },
                OrbitRep {
                    name: "b",
                    rep: rep_of(&[((1, 5), 1)]),
                    expected: LineQuadricProfile::OnePoint,
                },
                OrbitRep {
                    name: "c",
                    rep: rep_of(&[((1, 3), 1), ((1, 4), -1), ((2, 3), 1), ((2, 4), -1)]),
                    expected: LineQuadricProfile::TwoPoints,
                },
                OrbitRep {
                    name: "d",
                    rep: rep_of(&[((1, 3), 1), ((2, 3), -1)]),
                    expected: LineQuadricProfile::Tangent,
                },
                OrbitRep {
                    name: "e",
                    rep: rep_of(&[((1, 3), 1)]),
                    expected: LineQuadricProfile::Contained,
                },
            ],
        ),
    };

    let p_ring = WeightedRing::unweighted(&["p1", "p2", "p3", "p4", "p5"]);
    let (quadric, hyperplanes) = match tag {
        CaseTag::General => (
            parse_poly_env(&p_ring, &empty, "p1*p2 + p3*p4 + p5^2").unwrap(),
            Vec::new(),
        ),
        CaseTag::Special => (
            parse_poly_env(&p_ring, &empty, "p1*p2 + p3*p4").unwrap(),
            vec![Poly::var(&p_ring, "p5").unwrap()],
        ),
    };

    TypeIRCase {
        tag,
        cone_ring,
        q,
        s_poly,
        m_cone,
        cone_gens,
        univ3,
        rs_ring,
        cover,
        branch_quartic,
        scroll_ring,
        univ1_gens,
        rq_gens,
        fir_weight_rows,
        fiber_ring,
        fibers,
        orbit_reps,
        p_ring,
        quadric,
        hyperplanes,
    }
}

pub fn general() -> &'static TypeIRCase {
    static DATA: OnceLock<TypeIRCase> = OnceLock::new();
    DATA.get_or_init(|| build(CaseTag::General))
}

pub fn special() -> &'static TypeIRCase {
    static DATA: OnceLock<TypeIRCase> = OnceLock::new();
    DATA.get_or_init(|| build(CaseTag::Special))
}

/// The skew 10-vector of quadric values at a base point (x1..x4).
pub fn q_at(case: &TypeIRCase, x: &[Rat; 4]) -> [Rat; 10] {
    let mut pt = vec![rat_i(0); case.cone_ring.arity()];
    pt[..4].clone_from_slice(x);
    let mut out: [Rat; 10] = Default::default();
    for (k, ij) in PAIRS.iter().enumerate() {
        out[k] = case.q[ij].evaluate(&pt).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_cases_build() {
        let g = general();
        let s = special();
        assert_eq!(g.tag, CaseTag::General);
        assert_eq!(s.tag, CaseTag::Special);
        // fifth column of the special quadric matrix vanishes
        for (i, _) in [(1usize, 5usize), (2, 5), (3, 5), (4, 5)] {
            assert!(s.q[&(i, 5)].is_zero(), "q{}5 should vanish", i);
        }
    }

    #[test]
    fn general_s_has_the_printed_r12_coefficient() {
        let g = general();
        // coefficient of r12 in s(x, r) is x1*x4 + x2*x3
        let r12_ix = g.cone_ring.index_of("r12").unwrap();
        let mut coeff = Poly::zero(&g.cone_ring);
        for (m, c) in g.s_poly.terms() {
            if m.0[r12_ix] == 1 {
                let mut m2 = m.clone();
                m2.0[r12_ix] = 0;
                coeff = coeff + Poly::from_terms(&g.cone_ring, [(m2, c.clone())]);
            }
        }
        let expect =
            parse_poly_env(&g.cone_ring, &HashMap::new(), "x1*x4 + x2*x3").unwrap();
        assert_eq!(coeff, expect);
    }

    #[test]
    fn general_first_pfaffian_of_q_vanishes() {
        let g = general();
        // Pf_1234(q(x)) = (x2^2 x3^2 - x1^2 x4^2) - x2^2 x3^2 + x1^2 x4^2 = 0
        let entries: Vec<Poly> = PAIRS.iter().map(|ij| g.q[ij].clone()).collect();
        let skew = SkewPolyMatrix5::new(&g.cone_ring, entries).unwrap();
        assert!(skew.pfaffian4([1, 2, 3, 4]).unwrap().is_zero());
    }
}
