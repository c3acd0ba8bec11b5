//! Construction of the Type R polynomial data.
//!
//! Everything is built from the printed formulas; homogeneity invariants are
//! validated at construction and a failure aborts loudly.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::linalg::PolyMatrix;
use crate::parse::parse_poly_env;
use crate::rational::{rat, rat_i, Rat};
use crate::ring::{Degree, Poly, PolyMap, Ring, WeightedRing};

/// Index pairs for the quadric family, in storage order.
pub fn q_pairs() -> [(usize, usize); 10] {
    crate::pfaffian::PAIRS
}

/// All Type R data, immutable after construction.
pub struct TypeRData {
    /// The cone ring: x1..x5, y1..y5 weight 1; r0, r15, r24, r34, r35 weight 2.
    pub ring: Ring,
    /// Parser environment with every named family member.
    pub env: HashMap<String, Poly>,
    /// q_ij(x, y), keyed by (i, j) with i < j.
    pub q: HashMap<(usize, usize), Poly>,
    /// f1..f5 (binomial quadrics in the r variables).
    pub f: [Poly; 5],
    /// The nine cone equations RF1..RF9.
    pub rf: [Poly; 9],
    pub s4: [Poly; 4],
    pub k4: [Poly; 4],
    pub l4: [Poly; 4],
    pub u4: [Poly; 4],
    /// D_R: the quartic in x invariant under the full group action.
    pub d_r: Poly,
    /// The displayed 5x5 skew matrix with entries r + q (as its 10 upper
    /// entries in pair order).
    pub displayed_upper: Vec<Poly>,
    /// 5x4 matrix of the r-linear parts of RF1..RF5.
    pub mq: PolyMatrix,
    /// Resolution diagram matrices.
    pub a1: PolyMatrix,
    pub a2: PolyMatrix,
    pub a3: PolyMatrix,
    pub b1: PolyMatrix,
    pub b2: PolyMatrix,
    pub b3: PolyMatrix,
    pub c1: PolyMatrix,
    pub c2: PolyMatrix,
    pub c3: PolyMatrix,
    pub c4: PolyMatrix,
    /// Group generators as pullback substitutions on the cone ring.
    pub sigma: [PolyMap; 5],
    /// 4-dimensional representation matrices (r15, r24, r34, r35).
    pub rep4: [Vec<Vec<Rat>>; 4],
    /// 5-dimensional representation matrices on x (and y), generators 1..5.
    pub rep5: [Vec<Vec<Rat>>; 5],
    /// sigma5 r-part: linear 5x5 (order r15, r24, r34, r35, r0) and the
    /// affine quadric vector.
    pub sigma5_r_linear: Vec<Vec<Rat>>,
    pub sigma5_r_affine: [Poly; 5],

    /// The 3-space model: f1..f5 as quadrics on the unweighted parameter
    /// ring rt15, rt24, rt34, rt35.
    pub lr_ring: Ring,
    pub f_lr: [Poly; 5],
    /// The five distinguished points in the lr coordinates.
    pub points_q: [[Rat; 4]; 5],
    /// The cubic hypersurface ring z1..z5 and its defining polynomial.
    pub z_ring: Ring,
    pub segre_cubic: Poly,

    /// The x,y-only ring for the rank-matrix work.
    pub xy_ring: Ring,
    pub q_xy: HashMap<(usize, usize), Poly>,
    pub s4_xy: [Poly; 4],
    pub mq_xy: PolyMatrix,

    /// Scroll ring for the relative model over the 3-space:
    /// rt15, rt24, rt34, rt35, xt1..5, yt1..5, w.
    pub fr_ring: Ring,
    pub rtilde_gens: [Poly; 7],
    pub fr_weight_rows: [Vec<i64>; 2],

    /// Scroll ring for the blow-up model: s, rh0, rh15, rh24, rh34, rh35,
    /// xh1..5, yh1..5.
    pub rhat_ring: Ring,
    pub rhat_gens: [Poly; 9],
    pub rhat_weight_rows: [Vec<i64>; 2],

    /// The 20-variable cone ring (x, y weight 1; all ten r_ij weight 2) and
    /// its five Plücker generators of the centered matrix A(r + q(x, y)).
    pub gr_ring: Ring,
    pub gr_gens: [Poly; 5],
    pub gr_targets: [Poly; 2],

    /// Singular loci: the six special points (coordinates in ring order).
    pub p_points: [Vec<Rat>; 6],
}

fn var_names_big() -> Vec<(&'static str, u64)> {
    vec![
        ("x1", 1),
        ("x2", 1),
        ("x3", 1),
        ("x4", 1),
        ("x5", 1),
        ("y1", 1),
        ("y2", 1),
        ("y3", 1),
        ("y4", 1),
        ("y5", 1),
        ("r0", 2),
        ("r15", 2),
        ("r24", 2),
        ("r34", 2),
        ("r35", 2),
    ]
}

/// `q_ij = x_i y_j - x_j y_i` for a ring containing x1..x5, y1..y5.
fn build_q(ring: &Ring, xn: &str, yn: &str) -> HashMap<(usize, usize), Poly> {
    let mut q = HashMap::new();
    for (i, j) in q_pairs() {
        let xi = Poly::var(ring, &format!("{xn}{i}")).unwrap();
        let xj = Poly::var(ring, &format!("{xn}{j}")).unwrap();
        let yi = Poly::var(ring, &format!("{yn}{i}")).unwrap();
        let yj = Poly::var(ring, &format!("{yn}{j}")).unwrap();
        q.insert((i, j), &xi * &yj - &xj * &yi);
    }
    q
}

fn q_env(q: &HashMap<(usize, usize), Poly>, prefix: &str) -> HashMap<String, Poly> {
    q.iter()
        .map(|((i, j), p)| (format!("{prefix}{i}{j}"), p.clone()))
        .collect()
}

/// f1..f5 in terms of variables named `r15, r24, r34, r35` of `ring`.
fn build_f(ring: &Ring, names: [&str; 4]) -> [Poly; 5] {
    let mut env = HashMap::new();
    for (nick, actual) in ["r15", "r24", "r34", "r35"].iter().zip(names) {
        env.insert(nick.to_string(), Poly::var(ring, actual).unwrap());
    }
    let p = |s: &str| parse_poly_env(ring, &env, s).unwrap();
    [
        p("-r24*(r34 + r35)"),
        p("-(r15 - r35)*(r34 + r35)"),
        p("r15*r24"),
        p("r15*r34"),
        p("-(r24 + r34)*r35"),
    ]
}

/// S1..S4 from the q environment.
fn build_s(ring: &Ring, env: &HashMap<String, Poly>) -> [Poly; 4] {
    let p = |s: &str| parse_poly_env(ring, env, s).unwrap();
    [
        p("-q15*q24 + q45*q13 - q15*q14 - q15*q25 + q12*q15 + q13*q15 - q15^2"),
        p("q24*q34 + q24^2 - q12*q24 + q14*q34 + q14*q24 + q24*q25 - q12*q34 + q15*q24"),
        p("q15*q34 - q13*q34 - q13*q24 + q24*q35"),
        p("-q15*q34 - q15*q23 - q24*q35"),
    ]
}

/// The r-linear rows shared by the five cone equations and the rank matrix.
fn rf_linear_rows(env: &HashMap<String, Poly>, ring: &Ring) -> [[Poly; 4]; 5] {
    let p = |s: &str| parse_poly_env(ring, env, s).unwrap();
    [
        [
            Poly::zero(ring),
            p("-q13"),
            p("q12 - q14 - q24"),
            p("-(q14 + q24)"),
        ],
        [
            p("q23"),
            Poly::zero(ring),
            p("-(q15 + q25)"),
            p("q12 + q13 - q15 - q25"),
        ],
        [p("q24"), p("q15"), Poly::zero(ring), p("q14")],
        [
            p("q34"),
            Poly::zero(ring),
            p("q15 + q45"),
            p("-(q14 - q45)"),
        ],
        [
            Poly::zero(ring),
            p("-q35"),
            p("q25 - q45"),
            p("-(q24 + q34 + q45)"),
        ],
    ]
}

fn build_env_and_families(
    ring: &Ring,
) -> (
    HashMap<String, Poly>,
    HashMap<(usize, usize), Poly>,
    [Poly; 5],
    [Poly; 9],
    [Poly; 4],
    [Poly; 4],
    [Poly; 4],
    [Poly; 4],
) {
    let q = build_q(ring, "x", "y");
    let mut env = q_env(&q, "q");
    let f = build_f(ring, ["r15", "r24", "r34", "r35"]);
    for (k, fk) in f.iter().enumerate() {
        env.insert(format!("f{}", k + 1), fk.clone());
    }
    let rows = rf_linear_rows(&env, ring);
    let rvars: Vec<Poly> = ["r15", "r24", "r34", "r35"]
        .iter()
        .map(|n| Poly::var(ring, n).unwrap())
        .collect();
    let mut rf15: Vec<Poly> = Vec::with_capacity(5);
    for (k, row) in rows.iter().enumerate() {
        let mut acc = f[k].clone();
        for (c, r) in row.iter().zip(&rvars) {
            acc = acc + c * r;
        }
        rf15.push(acc);
    }
    let s4 = build_s(ring, &env);
    for (k, sk) in s4.iter().enumerate() {
        env.insert(format!("S{}", k + 1), sk.clone());
    }
    let p = |env: &HashMap<String, Poly>, s: &str| parse_poly_env(ring, env, s).unwrap();
    let k4 = [
        p(&env, "(3*q12 + 3*q13 - 3*q14 - 6*q15 - 2*q24 - 3*q25 - q34)*r15 - 2*q15*r24 + 2*(q15 + q45)*r34 + 2*(q14 + 3*q15 + q45)*r35"),
        p(&env, "2*q24*r15 + (-3*q12 - q13 + 3*q14 + 2*q15 + 6*q24 + 3*q25 + 3*q34)*r24 + 2*(-q12 + q14 + q24)*r34 + 2*(-q14 - 2*q24)*r35"),
        p(&env, "2*q34*r15 + (-2*q13 + 2*q35)*r24 + (-q12 - 3*q13 + q14 + 2*q15 - 2*q24 + q25 - 3*q34 - 2*q45)*r34 + 2*(q14 - 2*q34 - q45)*r35"),
        p(&env, "2*(-q23 - q34)*r15 - 2*q35*r24 + 2*(-q25 + q45)*r34 + (q12 + q13 - q14 + 2*q15 - 2*q24 - q25 + q34 + 2*q45)*r35"),
    ];
    let l4 = [
        p(&env, "-r15*(3*r15 + 2*r24 - 2*r34 - 6*r35)"),
        p(&env, "r24*(2*r15 + 3*r24 + 2*r34 - 4*r35)"),
        p(&env, "-r34*(-2*r15 + 2*r24 + 3*r34 + 4*r35)"),
        p(&env, "r35*(2*r15 - 2*r24 + 2*r34 + r35)"),
    ];
    let mut u4: Vec<Poly> = Vec::with_capacity(4);
    for i in 0..4 {
        let num = s4[i].scale_i(30) + k4[i].scale_i(5) + l4[i].scale_i(2);
        u4.push(num.scale(&rat(1, 30)));
    }
    for (k, uk) in u4.iter().enumerate() {
        env.insert(format!("U{}", k + 1), uk.clone());
        env.insert(format!("K{}", k + 1), k4[k].clone());
        env.insert(format!("L{}", k + 1), l4[k].clone());
    }
    let r0 = Poly::var(ring, "r0").unwrap();
    let mut rf = rf15;
    for i in 0..4 {
        rf.push(&r0 * &rvars[i] - u4[i].scale_i(30));
    }
    for (k, rfk) in rf.iter().enumerate() {
        env.insert(format!("RF{}", k + 1), rfk.clone());
    }
    let u4: [Poly; 4] = u4.try_into().unwrap();
    let rf: [Poly; 9] = rf.try_into().unwrap();
    let f_arr: [Poly; 5] = f;
    (env, q, f_arr, rf, s4, k4, l4, u4)
}

/// The displayed skew matrix entry (i, j) for the centered cone coordinates:
/// the r-part of each entry plus q_ij.
fn displayed_entries(env: &HashMap<String, Poly>, ring: &Ring) -> Vec<Poly> {
    let p = |s: &str| parse_poly_env(ring, env, s).unwrap();
    vec![
        p("q12"),
        p("r34 + r35 + q13"),
        p("q14"),
        p("r15 + q15"),
        p("-r34 - r35 + q23"),
        p("r24 + q24"),
        p("-r35 + q25"),
        p("r34 + q34"),
        p("r35 + q35"),
        p("q45"),
    ]
}

fn mat(env: &HashMap<String, Poly>, ring: &Ring, rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::from_rows(
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|s| parse_poly_env(ring, env, s).unwrap())
                    .collect()
            })
            .collect(),
    )
}

fn rep4_matrices() -> [Vec<Vec<Rat>>; 4] {
    let m = |rows: [[i64; 4]; 4]| -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|v| rat_i(*v)).collect())
            .collect()
    };
    [
        m([[-1, 0, 0, 0], [0, 1, 0, 0], [0, -1, -1, 0], [0, 1, 0, -1]]),
        m([[0, 0, 0, -1], [-1, -1, 0, 1], [1, 0, -1, -1], [-1, 0, 0, 0]]),
        m([[0, 0, -1, -1], [0, -1, 0, 0], [-1, 0, 0, 1], [0, 0, 0, -1]]),
        m([[-1, 0, 1, 1], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    ]
}

fn rep5_matrices() -> [Vec<Vec<Rat>>; 5] {
    let m = |rows: [[i64; 5]; 5]| -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|v| rat_i(*v)).collect())
            .collect()
    };
    [
        m([
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, -1, -1, 0, 0],
            [0, 0, 0, 1, 0],
            [-1, 0, 0, -1, -1],
        ]),
        m([
            [0, 0, -1, 0, 0],
            [1, 1, 1, 0, 0],
            [-1, 0, 0, 0, 0],
            [0, 1, 1, -1, -1],
            [0, 0, 0, 0, 1],
        ]),
        m([
            [1, 0, 0, 0, 0],
            [-1, 0, 0, -1, 0],
            [0, 0, 0, 0, -1],
            [-1, -1, 0, 0, 0],
            [0, 0, -1, 0, 0],
        ]),
        m([
            [1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 1, 0, -1, 0],
            [-1, 0, 1, 0, -1],
        ]),
        m([
            [0, 1, 0, -1, 0],
            [1, 0, 0, 1, 0],
            [-1, 0, 0, -1, -1],
            [0, 0, 0, 1, 0],
            [0, -1, -1, 0, 0],
        ]),
    ]
}

fn sigma5_r_linear() -> Vec<Vec<Rat>> {
    vec![
        vec![rat(-4, 5), rat(-1, 5), rat(1, 5), rat(3, 5), rat(1, 30)],
        vec![rat_i(0), rat_i(-1), rat_i(0), rat_i(0), rat_i(0)],
        vec![rat_i(0), rat_i(0), rat_i(-1), rat_i(0), rat_i(0)],
        vec![rat(1, 5), rat(-1, 5), rat(1, 5), rat(-2, 5), rat(1, 30)],
        vec![rat(36, 5), rat(-36, 5), rat(36, 5), rat(108, 5), rat(1, 5)],
    ]
}

fn sigma5_r_affine(env: &HashMap<String, Poly>, ring: &Ring) -> [Poly; 5] {
    let p = |s: &str| parse_poly_env(ring, env, s).unwrap();
    [
        p("1/2*(q12 + q13 - q14 - 2*q15 + 2*q23 + q34 - q25)"),
        p("-q14 - q24"),
        p("q14 - q34 - q45"),
        p("1/2*(-q12 - q13 - q14 + q25 + q34)"),
        p("6*(q12 + q13 + q15 - q23 - q24 - q25 - q34 + q45)"),
    ]
}

/// Build the pullback substitution of a group generator: x and y transform
/// by `m5` (matrix applied to the coordinate column vector), the r block by
/// the given linear matrix in the order (r15, r24, r34, r35, r0), with an
/// optional affine q-part.
fn sigma_map(
    ring: &Ring,
    m5: &[Vec<Rat>],
    r_linear: &[Vec<Rat>],
    r_affine: Option<&[Poly; 5]>,
) -> PolyMap {
    let n = ring.arity();
    let var = |name: &str| Poly::var(ring, name).unwrap();
    let mut assignment = vec![Poly::zero(ring); n];
    for (block, offset) in [("x", 0usize), ("y", 5)] {
        for i in 0..5 {
            let mut acc = Poly::zero(ring);
            for j in 0..5 {
                acc = acc + var(&format!("{block}{}", j + 1)).scale(&m5[i][j]);
            }
            assignment[offset + i] = acc;
        }
    }
    // ring order: r0 at index 10, then r15, r24, r34, r35.
    let r_order = ["r15", "r24", "r34", "r35", "r0"];
    for (row, _) in r_order.iter().enumerate() {
        let mut acc = Poly::zero(ring);
        for (col, rn) in r_order.iter().enumerate() {
            acc = acc + var(rn).scale(&r_linear[row][col]);
        }
        if let Some(aff) = r_affine {
            acc = acc + aff[row].clone();
        }
        let ring_ix = ring.index_of(r_order[row]).unwrap();
        assignment[ring_ix] = acc;
    }
    PolyMap::new(ring, ring, assignment).unwrap()
}

fn assert_homogeneous(p: &Poly, d: i64, what: &str) {
    match p.weighted_degree() {
        Degree::Homogeneous(got) if got == d => {}
        Degree::Zero => panic!("{what}: expected degree {d}, got zero polynomial"),
        other => panic!("{what}: expected homogeneous of degree {d}, got {other:?}"),
    }
}

fn build() -> TypeRData {
    let ring = WeightedRing::new(&var_names_big());
    let (env, q, f, rf, s4, k4, l4, u4) = build_env_and_families(&ring);

    // construction invariants: documented degrees
    for (i, j) in q_pairs() {
        assert_homogeneous(&q[&(i, j)], 2, &format!("q{i}{j}"));
    }
    for (k, fk) in f.iter().enumerate() {
        assert_homogeneous(fk, 4, &format!("f{}", k + 1));
    }
    for (k, p) in rf.iter().enumerate() {
        assert_homogeneous(p, 4, &format!("RF{}", k + 1));
    }
    for (fam, name) in [(&s4, "S"), (&k4, "K"), (&l4, "L"), (&u4, "U")] {
        for (k, p) in fam.iter().enumerate() {
            assert_homogeneous(p, 4, &format!("{name}{}", k + 1));
        }
    }

    let displayed_upper = displayed_entries(&env, &ring);

    let mq = {
        let rows = rf_linear_rows(&env, &ring);
        PolyMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    };

    // resolution diagram
    let c1 = mat(&env, &ring, &[&["r15", "r24", "r34", "r35"]]);
    let c2 = mat(
        &env,
        &ring,
        &[
            &["-r24", "-r34", "-r35", "0", "0", "0"],
            &["r15", "0", "0", "-r34", "-r35", "0"],
            &["0", "r15", "0", "r24", "0", "-r35"],
            &["0", "0", "r15", "0", "r24", "r34"],
        ],
    );
    let c3 = mat(
        &env,
        &ring,
        &[
            &["0", "0", "r35", "r34"],
            &["0", "r35", "0", "-r24"],
            &["0", "-r34", "-r24", "0"],
            &["r35", "0", "0", "r15"],
            &["-r34", "0", "r15", "0"],
            &["r24", "r15", "0", "0"],
        ],
    );
    let c4 = mat(&env, &ring, &[&["r15"], &["-r24"], &["r34"], &["-r35"]]);
    let a1 = mat(&env, &ring, &[&["RF5", "-RF4", "RF3", "-RF2", "RF1"]]);
    let a3 = mat(
        &env,
        &ring,
        &[&["RF5"], &["-RF4"], &["RF3"], &["-RF2"], &["RF1"]],
    );
    let a2 = {
        // the displayed skew matrix, full 5x5
        let mut rows = vec![vec![Poly::zero(&ring); 5]; 5];
        for (pos, (i, j)) in q_pairs().iter().enumerate() {
            rows[i - 1][j - 1] = displayed_upper[pos].clone();
            rows[j - 1][i - 1] = displayed_upper[pos].neg_ref();
        }
        PolyMatrix::from_rows(rows)
    };
    let b3 = mat(&env, &ring, &[&["U1"], &["-U2"], &["U3"], &["-U4"]]);
    let b2 = mat(
        &env,
        &ring,
        &[
            &[
                "1/3*q13",
                "-2/3*q23 + 1/3*(r34 + r35)",
                "0",
                "2/3*q34 + 1/3*r34",
                "-1/3*q35",
            ],
            &[
                "1/3*q13 + q24 - 2/3*q15 + 1/3*(-2*r15 + r24 + r34 + r35)",
                "-q24 + 1/3*q23 - 2/3*q25 + 1/3*(-2*r24 - r34 + r35)",
                "-q23 - q34 - 2/3*q35",
                "-q24 - 1/3*q34 - 2/3*q45 - 1/3*(2*r24 + r34)",
                "-1/3*q35",
            ],
            &[
                "q24 + 2/3*q14 + 1/3*r24",
                "-1/3*q24",
                "-1/3*q34",
                "0",
                "-q24 - q34 - 2/3*q45 - 1/3*(r24 + r34)",
            ],
            &[
                "1/3*q15",
                "-q15 - 2/3*q25 - 1/3*(r15 - r35)",
                "1/3*q35",
                "-q15 - 2/3*q45 - 1/3*r15",
                "0",
            ],
            &[
                "q15 + 2/3*r15",
                "q13 - q15 - 1/3*(r15 - r34)",
                "-q13 + q35 - 2/3*r34",
                "0",
                "-q15 - 2/3*r15",
            ],
            &[
                "0",
                "-q12 + q14 + q24 + 2/3*r24",
                "q12 - q14 - q15 - q24 - q25 - 1/3*(r15 + r24)",
                "0",
                "-q15 - q45 - 2/3*r15",
            ],
        ],
    );
    let b1 = mat(
        &env,
        &ring,
        &[
            &[
                "0",
                "-q34",
                "q24 + 1/3*(r24 + r34)",
                "-q23 + 2/3*r35",
                "-2/3*r34",
            ],
            &["-q35", "0", "q15 + 2/3*r15", "0", "-q13 - 2/3*r34"],
            &[
                "q25 - q45",
                "-q15 - q45 - r15",
                "-1/3*r15",
                "q15 + q25 + r15",
                "q12 - q14 - q24 + 1/3*(2*r15 - r24)",
            ],
            &[
                "-q24 - q34 - q45 - r24 - r34",
                "q14 - q45",
                "q14",
                "-q12 - q13 + q15 + q25 + 1/3*(r15 - 3*r34 - 3*r35)",
                "-q14 - q24 - r24",
            ],
        ],
    );

    let rep4 = rep4_matrices();
    let rep5 = rep5_matrices();
    let s5_lin = sigma5_r_linear();
    let s5_aff = sigma5_r_affine(&env, &ring);
    let sigma: [PolyMap; 5] = {
        let mut maps = Vec::with_capacity(5);
        for (k, _) in rep4.iter().enumerate() {
            // the 5-dim r-block: rep4 extended by r0 -> -r0
            let mut rl = vec![vec![rat_i(0); 5]; 5];
            for i in 0..4 {
                for j in 0..4 {
                    rl[i][j] = rep4[k][i][j].clone();
                }
            }
            rl[4][4] = rat_i(-1);
            maps.push(sigma_map(&ring, &rep5[k], &rl, None));
        }
        maps.push(sigma_map(&ring, &rep5[4], &s5_lin, Some(&s5_aff)));
        maps.try_into()
            .unwrap_or_else(|_| unreachable!("five generators"))
    };

    let d_r = parse_poly_env(
        &ring,
        &env,
        "x1^2*x2^2 + 2*x1^2*x2*x3 + x1^2*x3^2 - 2*x1^2*x2*x4 - 2*x1^2*x3*x4 \
         + 2*x1*x2*x3*x4 + 2*x1*x3^2*x4 + x1^2*x4^2 - 2*x1*x3*x4^2 \
         + x3^2*x4^2 + 2*x1*x2^2*x5 + 2*x1*x2*x3*x5 - 2*x1*x2*x4*x5 \
         - 4*x1*x3*x4*x5 - 2*x2*x3*x4*x5 + x2^2*x5^2",
    )
    .unwrap();
    assert_homogeneous(&d_r, 4, "D_R");

    // 3-space model
    let lr_ring = WeightedRing::unweighted(&["rt15", "rt24", "rt34", "rt35"]);
    let f_lr = build_f(&lr_ring, ["rt15", "rt24", "rt34", "rt35"]);
    let points_q = [
        [rat_i(1), rat_i(0), rat_i(0), rat_i(0)],
        [rat_i(0), rat_i(1), rat_i(0), rat_i(0)],
        [rat_i(0), rat_i(0), rat_i(1), rat_i(0)],
        [rat_i(1), rat_i(0), rat_i(0), rat_i(1)],
        [rat_i(0), rat_i(1), rat_i(-1), rat_i(1)],
    ];
    let z_ring = WeightedRing::unweighted(&["z1", "z2", "z3", "z4", "z5"]);
    let segre_cubic = parse_poly_env(
        &z_ring,
        &HashMap::new(),
        "-z1*(z3*z4 - z2*z5) - (z2 - z3)*(z2 + z4)*z5",
    )
    .unwrap();

    // x,y-only ring
    let xy_ring = WeightedRing::unweighted(&[
        "x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5",
    ]);
    let q_xy = build_q(&xy_ring, "x", "y");
    let env_xy = q_env(&q_xy, "q");
    let s4_xy = build_s(&xy_ring, &env_xy);
    let mq_xy = {
        let rows = rf_linear_rows(&env_xy, &xy_ring);
        PolyMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    };

    // scroll over the 3-space
    let fr_ring = WeightedRing::unweighted(&[
        "rt15", "rt24", "rt34", "rt35", "xt1", "xt2", "xt3", "xt4", "xt5", "yt1", "yt2", "yt3",
        "yt4", "yt5", "w",
    ]);
    let rtilde_gens = build_rtilde_gens(&fr_ring);
    let fr_weight_rows = [
        vec![1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
        vec![0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2],
    ];

    // scroll for the blow-up model
    let rhat_ring = WeightedRing::unweighted(&[
        "s", "rh0", "rh15", "rh24", "rh34", "rh35", "xh1", "xh2", "xh3", "xh4", "xh5", "yh1",
        "yh2", "yh3", "yh4", "yh5",
    ]);
    let rhat_gens = build_rhat_gens_in(&rhat_ring);
    let rhat_weight_rows = [
        vec![0, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        vec![1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    ];

    // the full cone in 20 variables
    let mut gr_vars: Vec<(String, u64)> = Vec::new();
    for i in 1..=5 {
        gr_vars.push((format!("x{i}"), 1));
    }
    for i in 1..=5 {
        gr_vars.push((format!("y{i}"), 1));
    }
    for (i, j) in q_pairs() {
        gr_vars.push((format!("r{i}{j}"), 2));
    }
    let gr_refs: Vec<(&str, u64)> = gr_vars.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    let gr_ring = WeightedRing::new(&gr_refs);
    let (gr_gens, gr_targets) = build_gr(&gr_ring);

    // the six distinguished points, in ring coordinate order
    let pt = |r0: i64, r15: i64, r24: i64, r34: i64, r35: i64| -> Vec<Rat> {
        let mut v = vec![rat_i(0); 15];
        v[10] = rat_i(r0);
        v[11] = rat_i(r15);
        v[12] = rat_i(r24);
        v[13] = rat_i(r34);
        v[14] = rat_i(r35);
        v
    };
    let p_points = [
        pt(1, 0, 0, 0, 0),
        pt(-6, 1, 0, 0, 0),
        pt(6, 0, 1, 0, 0),
        pt(-6, 0, 0, 1, 0),
        pt(6, 1, 0, 0, 1),
        pt(-6, 0, 1, -1, 1),
    ];

    TypeRData {
        ring,
        env,
        q,
        f,
        rf,
        s4,
        k4,
        l4,
        u4,
        d_r,
        displayed_upper,
        mq,
        a1,
        a2,
        a3,
        b1,
        b2,
        b3,
        c1,
        c2,
        c3,
        c4,
        sigma,
        rep4,
        rep5,
        sigma5_r_linear: s5_lin,
        sigma5_r_affine: s5_aff,
        lr_ring,
        f_lr,
        points_q,
        z_ring,
        segre_cubic,
        xy_ring,
        q_xy,
        s4_xy,
        mq_xy,
        fr_ring,
        rtilde_gens,
        fr_weight_rows,
        rhat_ring,
        rhat_gens,
        rhat_weight_rows,
        gr_ring,
        gr_gens,
        gr_targets,
        p_points,
    }
}

/// The seven relative-model equations over the 3-space: the two 5-term
/// linear relations in the f's, then the five w-modified cone equations.
fn build_rtilde_gens(ring: &Ring) -> [Poly; 7] {
    let q = build_q(ring, "xt", "yt");
    let mut env = q_env(&q, "q");
    let f = build_f(ring, ["rt15", "rt24", "rt34", "rt35"]);
    for (k, fk) in f.iter().enumerate() {
        env.insert(format!("f{}", k + 1), fk.clone());
    }
    let p = |s: &str| parse_poly_env(ring, &env, s).unwrap();
    [
        p("xt1*f5 - xt2*f4 + xt3*f3 - xt4*f2 + xt5*f1"),
        p("yt1*f5 - yt2*f4 + yt3*f3 - yt4*f2 + yt5*f1"),
        p("-q13*rt24 + (q12 - q14 - q24)*rt34 - (q14 + q24)*rt35 + w*f1"),
        p("q23*rt15 - (q15 + q25)*rt34 + (q12 + q13 - q15 - q25)*rt35 + w*f2"),
        p("q24*rt15 + q15*rt24 + q14*rt35 + w*f3"),
        p("q34*rt15 + (q15 + q45)*rt34 - (q14 - q45)*rt35 + w*f4"),
        p("-q35*rt24 + (q25 - q45)*rt34 - (q24 + q34 + q45)*rt35 + w*f5"),
    ]
}

/// The nine blow-up-model equations: the five s-modified linear rows and the
/// four unprojection rows with the s-expanded right-hand sides.
pub(crate) fn build_rhat_gens_in(ring: &Ring) -> [Poly; 9] {
    let q = build_q(ring, "xh", "yh");
    let mut env = q_env(&q, "q");
    let f = build_f(ring, ["rh15", "rh24", "rh34", "rh35"]);
    for (k, fk) in f.iter().enumerate() {
        env.insert(format!("f{}", k + 1), fk.clone());
    }
    let s4 = build_s(ring, &env);
    for (k, sk) in s4.iter().enumerate() {
        env.insert(format!("S{}", k + 1), sk.clone());
    }
    // K and L in the hatted variables
    let rename: HashMap<String, Poly> = [
        ("r15", "rh15"),
        ("r24", "rh24"),
        ("r34", "rh34"),
        ("r35", "rh35"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), Poly::var(ring, b).unwrap()))
    .collect();
    env.extend(rename);
    let p = |env: &HashMap<String, Poly>, s: &str| parse_poly_env(ring, env, s).unwrap();
    let k4 = [
        p(&env, "(3*q12 + 3*q13 - 3*q14 - 6*q15 - 2*q24 - 3*q25 - q34)*r15 - 2*q15*r24 + 2*(q15 + q45)*r34 + 2*(q14 + 3*q15 + q45)*r35"),
        p(&env, "2*q24*r15 + (-3*q12 - q13 + 3*q14 + 2*q15 + 6*q24 + 3*q25 + 3*q34)*r24 + 2*(-q12 + q14 + q24)*r34 + 2*(-q14 - 2*q24)*r35"),
        p(&env, "2*q34*r15 + (-2*q13 + 2*q35)*r24 + (-q12 - 3*q13 + q14 + 2*q15 - 2*q24 + q25 - 3*q34 - 2*q45)*r34 + 2*(q14 - 2*q34 - q45)*r35"),
        p(&env, "2*(-q23 - q34)*r15 - 2*q35*r24 + 2*(-q25 + q45)*r34 + (q12 + q13 - q14 + 2*q15 - 2*q24 - q25 + q34 + 2*q45)*r35"),
    ];
    for (k, kk) in k4.iter().enumerate() {
        env.insert(format!("K{}", k + 1), kk.clone());
    }
    [
        p(&env, "-q13*rh24 + (q12 - q14 - q24)*rh34 - (q14 + q24)*rh35 + s*f1"),
        p(&env, "q23*rh15 - (q15 + q25)*rh34 + (q12 + q13 - q15 - q25)*rh35 + s*f2"),
        p(&env, "q24*rh15 + q15*rh24 + q14*rh35 + s*f3"),
        p(&env, "q34*rh15 + (q15 + q45)*rh34 - (q14 - q45)*rh35 + s*f4"),
        p(&env, "-q35*rh24 + (q25 - q45)*rh34 - (q24 + q34 + q45)*rh35 + s*f5"),
        p(&env, "rh0*rh15 - (30*S1 + 5*s*K1 + 2*s^2*(-r15*(3*r15 + 2*r24 - 2*r34 - 6*r35)))"),
        p(&env, "rh0*rh24 - (30*S2 + 5*s*K2 + 2*s^2*(r24*(2*r15 + 3*r24 + 2*r34 - 4*r35)))"),
        p(&env, "rh0*rh34 - (30*S3 + 5*s*K3 + 2*s^2*(-r34*(-2*r15 + 2*r24 + 3*r34 + 4*r35)))"),
        p(&env, "rh0*rh35 - (30*S4 + 5*s*K4 + 2*s^2*(r35*(2*r15 - 2*r24 + 2*r34 + r35)))"),
    ]
}

/// Generators of the full 20-variable cone (five Plücker relations of the
/// centered matrix) and the two 5-term relations its points satisfy.
fn build_gr(ring: &Ring) -> ([Poly; 5], [Poly; 2]) {
    use crate::pfaffian::{skew_from_sum, SkewPolyMatrix5, PLUCKER_INDEX_SETS};
    let q = build_q(ring, "x", "y");
    let q_entries: Vec<Poly> = q_pairs().iter().map(|ij| q[ij].clone()).collect();
    let r_entries: Vec<Poly> = q_pairs()
        .iter()
        .map(|(i, j)| Poly::var(ring, &format!("r{i}{j}")).unwrap())
        .collect();
    let centered = skew_from_sum(ring, &r_entries, &q_entries).unwrap();
    let gens: [Poly; 5] = centered.plucker().into_vec().try_into().unwrap();
    // the pure-r Pfaffians
    let rmat = SkewPolyMatrix5::generic(ring, |i, j| format!("r{i}{j}")).unwrap();
    let pf: Vec<Poly> = PLUCKER_INDEX_SETS
        .iter()
        .map(|idx| rmat.pfaffian4(*idx).unwrap())
        .collect();
    let var = |n: &str| Poly::var(ring, n).unwrap();
    let target = |pre: &str| -> Poly {
        var(&format!("{pre}1")) * &pf[4] - var(&format!("{pre}2")) * &pf[3]
            + var(&format!("{pre}3")) * &pf[2]
            - var(&format!("{pre}4")) * &pf[1]
            + var(&format!("{pre}5")) * &pf[0]
    };
    (gens, [target("x"), target("y")])
}

/// The shared, lazily-built data. Construction validates all invariants.
pub fn data() -> &'static TypeRData {
    static DATA: OnceLock<TypeRData> = OnceLock::new();
    DATA.get_or_init(build)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_i;

    #[test]
    fn f3_is_the_product_binomial() {
        let d = data();
        let expect = parse_poly_env(&d.ring, &HashMap::new(), "r15*r24").unwrap();
        assert_eq!(d.f[2], expect);
    }

    #[test]
    fn u1_combination() {
        let d = data();
        let lhs = d.u4[0].scale_i(30);
        let rhs = d.s4[0].scale_i(30) + d.k4[0].scale_i(5) + d.l4[0].scale_i(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rf6_vanishes_at_first_special_point() {
        let d = data();
        let val = d.rf[5].evaluate(&d.p_points[1]).unwrap();
        assert_eq!(val, rat_i(0));
    }

    #[test]
    fn rf3_weighted_degree_is_four() {
        let d = data();
        assert_eq!(d.rf[2].weighted_degree(), Degree::Homogeneous(4));
        // mixed-weight sum is flagged
        let x1 = Poly::var(&d.ring, "x1").unwrap();
        let r15 = Poly::var(&d.ring, "r15").unwrap();
        assert_eq!((x1 + r15).weighted_degree(), Degree::Inhomogeneous);
    }
}
