//! 5×5 skew-symmetric polynomial matrices, their 4×4 Pfaffians, the five
//! Plücker relations, rank-2 wedges, and line/quadric incidence profiles.

use num_traits::Zero;

use crate::linalg::RatMatrix;
use crate::rational::Rat;
use crate::ring::{AlgebraError, Poly, Ring};

/// Index pairs `(i, j)` with `1 ≤ i < j ≤ 5`, in the fixed storage order.
pub const PAIRS: [(usize, usize); 10] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
];

/// The fixed order of the five Plücker relations.
pub const PLUCKER_INDEX_SETS: [[usize; 4]; 5] = [
    [1, 2, 3, 4],
    [1, 2, 3, 5],
    [1, 2, 4, 5],
    [1, 3, 4, 5],
    [2, 3, 4, 5],
];

/// A 5×5 skew-symmetric matrix of polynomials, stored by its upper entries
/// `t_ij (i < j)`; the lower triangle and diagonal are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPolyMatrix5 {
    ring: Ring,
    upper: Vec<Poly>, // indexed by PAIRS order
}

impl SkewPolyMatrix5 {
    pub fn new(ring: &Ring, upper: Vec<Poly>) -> Result<SkewPolyMatrix5, AlgebraError> {
        if upper.len() != 10 {
            return Err(AlgebraError::ArityMismatch {
                expected: 10,
                got: upper.len(),
            });
        }
        for p in &upper {
            if **p.ring() != **ring {
                return Err(AlgebraError::RingMismatch("skew matrix entries".into()));
            }
        }
        Ok(SkewPolyMatrix5 {
            ring: ring.clone(),
            upper,
        })
    }

    /// The generic matrix `A(t)` whose `(i,j)` entry is the ring variable
    /// named by `name(i, j)`.
    pub fn generic<F: Fn(usize, usize) -> String>(
        ring: &Ring,
        name: F,
    ) -> Result<SkewPolyMatrix5, AlgebraError> {
        let mut upper = Vec::with_capacity(10);
        for (i, j) in PAIRS {
            upper.push(Poly::var(ring, &name(i, j))?);
        }
        Self::new(ring, upper)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Entry `(i, j)` for any `i ≠ j` (1-based), with the sign convention
    /// `A_ji = -A_ij`; diagonal entries are zero.
    pub fn entry(&self, i: usize, j: usize) -> Poly {
        assert!((1..=5).contains(&i) && (1..=5).contains(&j));
        if i == j {
            return Poly::zero(&self.ring);
        }
        if i < j {
            let pos = PAIRS.iter().position(|p| *p == (i, j)).unwrap();
            self.upper[pos].clone()
        } else {
            let pos = PAIRS.iter().position(|p| *p == (j, i)).unwrap();
            self.upper[pos].neg_ref()
        }
    }

    pub fn upper_entries(&self) -> &[Poly] {
        &self.upper
    }

    /// The 4×4 Pfaffian on rows/columns `idx` (strictly increasing):
    /// `t_ij t_kl - t_ik t_jl + t_il t_jk`.
    pub fn pfaffian4(&self, idx: [usize; 4]) -> Result<Poly, AlgebraError> {
        let [i, j, k, l] = idx;
        if !(i < j && j < k && k < l && (1..=5).contains(&i) && l <= 5) {
            return Err(AlgebraError::BadIndexSet);
        }
        let t = |a: usize, b: usize| self.entry(a, b);
        Ok(t(i, j) * t(k, l) - t(i, k) * t(j, l) + t(i, l) * t(j, k))
    }

    /// The five Pfaffians in the fixed `PLUCKER_INDEX_SETS` order.
    pub fn plucker(&self) -> PluckerSystem {
        let polys = PLUCKER_INDEX_SETS
            .iter()
            .map(|idx| self.pfaffian4(*idx).unwrap())
            .collect::<Vec<_>>()
            .try_into()
            .unwrap();
        PluckerSystem { polys }
    }

    /// The full 4×4 submatrix on `idx`, for determinant cross-checks.
    pub fn submatrix4(&self, idx: [usize; 4], point: &[Rat]) -> Result<RatMatrix, AlgebraError> {
        let mut m = RatMatrix::zero(4, 4);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self.entry(i, j).evaluate(point)?;
            }
        }
        Ok(m)
    }
}

/// The five Pfaffians of a skew matrix, in the fixed order
/// (1234),(1235),(1245),(1345),(2345).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerSystem {
    polys: [Poly; 5],
}

impl PluckerSystem {
    pub fn polys(&self) -> &[Poly; 5] {
        &self.polys
    }

    pub fn is_zero(&self) -> bool {
        self.polys.iter().all(|p| p.is_zero())
    }

    pub fn into_vec(self) -> Vec<Poly> {
        self.polys.into()
    }
}

/// Rank-2 wedge of two rational 5-vectors: `r_ij = u_i v_j - u_j v_i`,
/// returned in `PAIRS` order.
pub fn wedge2(u: &[Rat; 5], v: &[Rat; 5]) -> [Rat; 10] {
    let mut out: [Rat; 10] = Default::default();
    for (pos, (i, j)) in PAIRS.iter().enumerate() {
        out[pos] = u[i - 1].clone() * v[j - 1].clone() - u[j - 1].clone() * v[i - 1].clone();
    }
    out
}

/// Evaluate a skew 10-vector's five Pfaffians.
pub fn plucker_values(r: &[Rat; 10]) -> [Rat; 5] {
    let at = |i: usize, j: usize| -> Rat {
        if i < j {
            let pos = PAIRS.iter().position(|p| *p == (i, j)).unwrap();
            r[pos].clone()
        } else {
            let pos = PAIRS.iter().position(|p| *p == (j, i)).unwrap();
            -r[pos].clone()
        }
    };
    let mut out: [Rat; 5] = Default::default();
    for (k, [i, j, kk, l]) in PLUCKER_INDEX_SETS.iter().copied().enumerate() {
        out[k] = at(i, j) * at(kk, l) - at(i, kk) * at(j, l) + at(i, l) * at(j, kk);
    }
    out
}

/// The signed Pfaffian 5-vector
/// `[Pf_2345, -Pf_1345, Pf_1245, -Pf_1235, Pf_1234]` of a skew 10-vector,
/// defined exactly when the input has rank 4 (some Pfaffian nonzero). When
/// `r = u∧v + w∧z` has rank 4 the output functional annihilates u, v, w, z.
pub fn mu_map(r: &[Rat; 10]) -> Result<[Rat; 5], AlgebraError> {
    if r.iter().all(|v| v.is_zero()) {
        return Err(AlgebraError::Precondition("mu of zero vector".into()));
    }
    let pf = plucker_values(r);
    if pf.iter().all(|v| v.is_zero()) {
        return Err(AlgebraError::Precondition(
            "mu undefined: all five Pfaffians vanish (rank <= 2)".into(),
        ));
    }
    Ok([
        pf[4].clone(),
        -pf[3].clone(),
        pf[2].clone(),
        -pf[1].clone(),
        pf[0].clone(),
    ])
}

/// Incidence class of a line against a quadric, possibly cut by extra
/// hyperplanes (used when the quadric is a surface inside a hyperplane).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineQuadricProfile {
    /// The line misses the quadric locus entirely.
    Disjoint,
    /// Exactly one reduced intersection point.
    OnePoint,
    /// Two distinct intersection points.
    TwoPoints,
    /// A double intersection point.
    Tangent,
    /// The line lies inside the locus.
    Contained,
}

impl LineQuadricProfile {
    pub fn as_str(&self) -> &'static str {
        match self {
            LineQuadricProfile::Disjoint => "disjoint",
            LineQuadricProfile::OnePoint => "one-point",
            LineQuadricProfile::TwoPoints => "two-points",
            LineQuadricProfile::Tangent => "tangent",
            LineQuadricProfile::Contained => "contained",
        }
    }
}

/// Recover spanning vectors of a decomposable (rank-2) skew 10-vector by
/// taking the first two independent rows of its matrix. Any gauge works:
/// the classification below is span-invariant.
pub fn decompose_rank2(r: &[Rat; 10]) -> Result<([Rat; 5], [Rat; 5]), AlgebraError> {
    let pf = plucker_values(r);
    if !pf.iter().all(|v| v.is_zero()) {
        return Err(AlgebraError::Precondition(
            "not decomposable: a Pfaffian is nonzero".into(),
        ));
    }
    let at = |i: usize, j: usize| -> Rat {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Rat::zero(),
            Less => {
                let pos = PAIRS.iter().position(|p| *p == (i, j)).unwrap();
                r[pos].clone()
            }
            Greater => {
                let pos = PAIRS.iter().position(|p| *p == (j, i)).unwrap();
                -r[pos].clone()
            }
        }
    };
    // find (i, j) with r_ij != 0; rows i and j then span the plane
    for (i, j) in PAIRS {
        if !at(i, j).is_zero() {
            let mut u: [Rat; 5] = Default::default();
            let mut v: [Rat; 5] = Default::default();
            for c in 1..=5 {
                u[c - 1] = at(i, c);
                v[c - 1] = at(j, c);
            }
            return Ok((u, v));
        }
    }
    Err(AlgebraError::Precondition("zero skew vector".into()))
}

/// Classify the intersection of the line spanned by the decomposable `r`
/// with the locus `{quadric = 0} ∩ {hyperplanes = 0}`. The quadric and the
/// hyperplane forms live in a 5-variable ring; the line is restricted to
/// parameters `(s, t) ↦ s·u + t·v`.
pub fn line_quadric_profile(
    r: &[Rat; 10],
    quadric: &Poly,
    hyperplanes: &[Poly],
) -> Result<LineQuadricProfile, AlgebraError> {
    let (u, v) = decompose_rank2(r)?;
    // restrict a form to the line: binary form coefficients in (s, t)
    let eval_pt = |a: &Rat, b: &Rat| -> Vec<Rat> {
        (0..5)
            .map(|c| a.clone() * u[c].clone() + b.clone() * v[c].clone())
            .collect()
    };
    use crate::rational::rat_i;
    // Q(s*u + t*v) = a s^2 + b st + c t^2 recovered from three evaluations
    let q00 = quadric.evaluate(&eval_pt(&rat_i(1), &rat_i(0)))?;
    let q01 = quadric.evaluate(&eval_pt(&rat_i(0), &rat_i(1)))?;
    let q11 = quadric.evaluate(&eval_pt(&rat_i(1), &rat_i(1)))?;
    let a = q00.clone();
    let c = q01.clone();
    let b = q11 - q00 - q01;
    // restrict hyperplanes: λ(s, t) = α s + β t
    let mut lin: Vec<(Rat, Rat)> = Vec::new();
    for h in hyperplanes {
        let alpha = h.evaluate(&eval_pt(&rat_i(1), &rat_i(0)))?;
        let beta = h.evaluate(&eval_pt(&rat_i(0), &rat_i(1)))?;
        if !alpha.is_zero() || !beta.is_zero() {
            lin.push((alpha, beta));
        }
    }
    if lin.is_empty() {
        // line against the quadric hypersurface alone
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Ok(LineQuadricProfile::Contained);
        }
        let disc = b.clone() * b.clone() - rat_i(4) * a.clone() * c.clone();
        return Ok(if disc.is_zero() {
            LineQuadricProfile::Tangent
        } else {
            LineQuadricProfile::TwoPoints
        });
    }
    if lin.len() > 1 {
        // two independent linear constraints on a line: empty or a point
        let (a1, b1) = lin[0].clone();
        let (a2, b2) = lin[1].clone();
        if (a1.clone() * b2.clone() - a2.clone() * b1.clone()).is_zero() && lin.len() == 2 {
            // proportional constraints: fall through with one of them
        } else {
            return Err(AlgebraError::Precondition(
                "line not in general position against hyperplane stack".into(),
            ));
        }
    }
    // one effective linear constraint: intersection point is its root
    let (alpha, beta) = lin[0].clone();
    // root of alpha s + beta t: (s, t) = (beta, -alpha) up to scale
    let s0 = beta;
    let t0 = -alpha;
    let qval = a * s0.clone() * s0.clone() + b * s0 * t0.clone() + c * t0.clone() * t0;
    Ok(if qval.is_zero() {
        LineQuadricProfile::OnePoint
    } else {
        LineQuadricProfile::Disjoint
    })
}

/// Skew matrix `A(r + q)` of a sum of two 10-entry families, in `PAIRS`
/// order — the generic cone matrix after centering coordinates.
pub fn skew_from_sum(
    ring: &Ring,
    r_entries: &[Poly],
    q_entries: &[Poly],
) -> Result<SkewPolyMatrix5, AlgebraError> {
    if r_entries.len() != 10 || q_entries.len() != 10 {
        return Err(AlgebraError::ArityMismatch {
            expected: 10,
            got: r_entries.len().min(q_entries.len()),
        });
    }
    let upper = r_entries
        .iter()
        .zip(q_entries)
        .map(|(a, b)| a.add_ref(b))
        .collect();
    SkewPolyMatrix5::new(ring, upper)
}

/// The mixed bilinear expansion term of `Pf_ijkl(r + q)` when both `r` and
/// `q` satisfy the Plücker relations:
/// `(r_ij q_kl + r_kl q_ij) - (r_ik q_jl + r_jl q_ik) + (r_il q_jk + r_jk q_il)`.
pub fn mixed_pfaffian_term(
    idx: [usize; 4],
    r: &dyn Fn(usize, usize) -> Poly,
    q: &dyn Fn(usize, usize) -> Poly,
) -> Poly {
    let [i, j, k, l] = idx;
    (r(i, j) * q(k, l) + r(k, l) * q(i, j)) - (r(i, k) * q(j, l) + r(j, l) * q(i, k))
        + (r(i, l) * q(j, k) + r(j, k) * q(i, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};
    use crate::ring::WeightedRing;

    fn t_ring() -> Ring {
        let names: Vec<String> = PAIRS.iter().map(|(i, j)| format!("t{i}{j}")).collect();
        let refs: Vec<(&str, u64)> = names.iter().map(|n| (n.as_str(), 1)).collect();
        WeightedRing::new(&refs)
    }

    #[test]
    fn generic_pfaffian_formula() {
        let ring = t_ring();
        let m = SkewPolyMatrix5::generic(&ring, |i, j| format!("t{i}{j}")).unwrap();
        let pf = m.pfaffian4([1, 2, 3, 4]).unwrap();
        let expect = crate::parse::parse_poly(&ring, "t12*t34 - t13*t24 + t14*t23").unwrap();
        assert_eq!(pf, expect);
        assert!(m.pfaffian4([1, 1, 2, 3]).is_err());
        assert!(m.pfaffian4([2, 1, 3, 4]).is_err());
    }

    #[test]
    fn pfaffian_squared_is_determinant() {
        // random-ish rational entries, all five index sets
        let ring = t_ring();
        let m = SkewPolyMatrix5::generic(&ring, |i, j| format!("t{i}{j}")).unwrap();
        let point: Vec<Rat> = (0..10).map(|k| rat(2 * k as i64 - 7, (k % 3 + 1) as i64)).collect();
        for idx in PLUCKER_INDEX_SETS {
            let pf = m.pfaffian4(idx).unwrap().evaluate(&point).unwrap();
            let det = m.submatrix4(idx, &point).unwrap().det();
            assert_eq!(pf.clone() * pf, det);
        }
    }

    #[test]
    fn wedge_is_rank_two() {
        let u: [Rat; 5] = std::array::from_fn(|i| rat_i(i as i64 + 1));
        let v: [Rat; 5] = std::array::from_fn(|i| rat(3 - i as i64, 2));
        let w = wedge2(&u, &v);
        assert!(plucker_values(&w).iter().all(|x| x.is_zero()));
        let zero = wedge2(&u, &u);
        assert!(zero.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn mu_on_standard_rank4() {
        // r12 = r34 = 1 -> [0,0,0,0,1]
        let mut r: [Rat; 10] = Default::default();
        r[0] = rat_i(1); // (1,2)
        r[7] = rat_i(1); // (3,4)
        let z = mu_map(&r).unwrap();
        assert_eq!(z, [rat_i(0), rat_i(0), rat_i(0), rat_i(0), rat_i(1)]);
        // r12 = r45 = 1 -> [0,0,1,0,0]
        let mut r2: [Rat; 10] = Default::default();
        r2[0] = rat_i(1);
        r2[9] = rat_i(1);
        let z2 = mu_map(&r2).unwrap();
        assert_eq!(z2, [rat_i(0), rat_i(0), rat_i(1), rat_i(0), rat_i(0)]);
    }

    #[test]
    fn mu_rejects_rank_two() {
        let u: [Rat; 5] = std::array::from_fn(|i| rat_i(i as i64 + 1));
        let v: [Rat; 5] = std::array::from_fn(|i| rat_i(2 * i as i64 - 3));
        let w = wedge2(&u, &v);
        assert!(mu_map(&w).is_err());
    }

    #[test]
    fn profile_on_smooth_quadric() {
        let pring = WeightedRing::unweighted(&["p1", "p2", "p3", "p4", "p5"]);
        let q = crate::parse::parse_poly(&pring, "p1*p2 + p3*p4 + p5^2").unwrap();
        let e = |k: usize| -> [Rat; 5] { std::array::from_fn(|i| rat_i((i + 1 == k) as i64)) };
        let two = wedge2(&e(1), &e(2));
        assert_eq!(
            line_quadric_profile(&two, &q, &[]).unwrap(),
            LineQuadricProfile::TwoPoints
        );
        let tangent = wedge2(&e(4), &e(5));
        assert_eq!(
            line_quadric_profile(&tangent, &q, &[]).unwrap(),
            LineQuadricProfile::Tangent
        );
        let contained = wedge2(&e(2), &e(3));
        assert_eq!(
            line_quadric_profile(&contained, &q, &[]).unwrap(),
            LineQuadricProfile::Contained
        );
    }
}
