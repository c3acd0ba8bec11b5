//! Bounded-degree ideal-membership certificates via exact linear algebra.
//!
//! A certificate witnesses `target = Σ coeff[i] * gens[i]` and is re-expanded
//! on construction, so a returned certificate is always a proof. A `None`
//! result means "no certificate at this bound", never non-membership.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::linalg::RatMatrix;
use crate::rational::{rat_i, Rat};
use crate::ring::{AlgebraError, Degree, Monomial, Poly, PolyMap, Ring};

/// A nonempty list of generators in a shared ring.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    ring: Ring,
    gens: Vec<Poly>,
}

impl GeneratorSet {
    pub fn new(gens: Vec<Poly>) -> Result<GeneratorSet, AlgebraError> {
        if gens.is_empty() {
            return Err(AlgebraError::Precondition("empty generator set".into()));
        }
        let ring = gens[0].ring().clone();
        for g in &gens {
            if g.is_zero() {
                return Err(AlgebraError::Precondition("zero generator".into()));
            }
            if g.ring() != &ring && **g.ring() != *ring {
                return Err(AlgebraError::RingMismatch("generator set".into()));
            }
        }
        Ok(GeneratorSet { ring, gens })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Coefficient list witnessing `target = Σ coeffs[i] * gens[i]`.
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub target: Poly,
    pub coeffs: Vec<Poly>,
    pub degree_bound: i64,
}

impl MembershipCertificate {
    /// Re-expand and verify; constructing an invalid certificate is an error.
    fn checked(
        target: Poly,
        gens: &GeneratorSet,
        coeffs: Vec<Poly>,
        degree_bound: i64,
    ) -> Result<MembershipCertificate, AlgebraError> {
        let mut acc = Poly::zero(gens.ring());
        for (c, g) in coeffs.iter().zip(gens.gens()) {
            acc = acc.add_ref(&c.mul_ref(g));
        }
        if acc != target {
            return Err(AlgebraError::Precondition(
                "certificate does not re-expand to target".into(),
            ));
        }
        Ok(MembershipCertificate {
            target,
            coeffs,
            degree_bound,
        })
    }

    /// Independent re-expansion check (used by tests and the report).
    pub fn verify(&self, gens: &GeneratorSet) -> bool {
        let mut acc = Poly::zero(gens.ring());
        for (c, g) in self.coeffs.iter().zip(gens.gens()) {
            acc = acc.add_ref(&c.mul_ref(g));
        }
        acc == self.target
    }

    /// Serialized form for reports: `generator index -> coefficient text`.
    pub fn to_text(&self) -> String {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("g{} <- {}", i + 1, c.to_text()))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// All monomials of exact weighted degree `d` in `ring`.
pub fn monomials_of_weighted_degree(ring: &Ring, d: i64) -> Vec<Monomial> {
    let weights = ring.weights();
    let mut out = Vec::new();
    let mut exps = vec![0u16; ring.arity()];
    fn rec(
        weights: &[u64],
        ix: usize,
        remaining: i64,
        exps: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
    ) {
        if ix == weights.len() {
            if remaining == 0 {
                out.push(Monomial(exps.iter().copied().collect()));
            }
            return;
        }
        if remaining < 0 {
            return;
        }
        let w = weights[ix] as i64;
        let max = remaining / w;
        for e in 0..=max {
            exps[ix] = e as u16;
            rec(weights, ix + 1, remaining - e * w, exps, out);
        }
        exps[ix] = 0;
    }
    if d >= 0 {
        rec(weights, 0, d, &mut exps, &mut out);
    }
    out
}

/// All monomials of weighted degree ≤ `bound`.
pub fn monomials_up_to_weighted_degree(ring: &Ring, bound: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 0..=bound.max(0) {
        out.extend(monomials_of_weighted_degree(ring, d));
    }
    out
}

/// Sparse exact solver: find any solution of the linear system given by
/// `columns` (one sparse column per unknown, keyed by row id) against the
/// sparse right-hand side. Rows absent everywhere are ignored.
fn solve_sparse(
    columns: &[BTreeMap<Monomial, Rat>],
    rhs: &BTreeMap<Monomial, Rat>,
) -> Option<Vec<Rat>> {
    // Collect the row universe.
    let mut row_ids: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for col in columns {
        for m in col.keys() {
            let next = row_ids.len();
            row_ids.entry(m).or_insert(next);
        }
    }
    for m in rhs.keys() {
        let next = row_ids.len();
        row_ids.entry(m).or_insert(next);
    }
    let nrows = row_ids.len();
    let ncols = columns.len();
    // Dense-ish elimination on sparse rows stored as Vec<(col, val)>.
    let mut rows: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); nrows];
    let mut b: Vec<Rat> = vec![Rat::zero(); nrows];
    for (j, col) in columns.iter().enumerate() {
        for (m, v) in col {
            let i = row_ids[m];
            rows[i].push((j, v.clone()));
        }
    }
    for (m, v) in rhs {
        b[row_ids[m]] = v.clone();
    }
    // Forward elimination over columns in order, touching only rows that
    // have not yet served as pivots. A row's entry in a column never changes
    // after that column is processed, so non-pivot rows are zero at the end
    // and consistency reduces to their right-hand sides vanishing.
    let get = |row: &Vec<(usize, Rat)>, j: usize| -> Rat {
        row.iter()
            .find(|(c, _)| *c == j)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Rat::zero)
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col) in order
    let mut used = vec![false; nrows];
    for j in 0..ncols {
        // prefer the sparsest eligible row to limit fill-in
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in rows.iter().enumerate() {
            if used[i] {
                continue;
            }
            if row.iter().any(|(c, v)| *c == j && !v.is_zero()) {
                let nnz = row.len();
                if best.map_or(true, |(_, bn)| nnz < bn) {
                    best = Some((i, nnz));
                }
            }
        }
        let Some((pi, _)) = best else { continue };
        used[pi] = true;
        pivots.push((pi, j));
        let pval = get(&rows[pi], j);
        let prow = rows[pi].clone();
        let pb = b[pi].clone();
        for i in 0..nrows {
            if used[i] {
                continue;
            }
            let f = get(&rows[i], j);
            if f.is_zero() {
                continue;
            }
            let factor = f / pval.clone();
            let mut merged: BTreeMap<usize, Rat> = rows[i].iter().cloned().collect();
            for (c, v) in &prow {
                let e = merged.entry(*c).or_insert_with(Rat::zero);
                *e -= factor.clone() * v.clone();
            }
            rows[i] = merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            b[i] -= factor.clone() * pb.clone();
        }
    }
    // rows that never pivoted are now identically zero; they are consistent
    // iff their right-hand side is zero
    for (i, _) in rows.iter().enumerate() {
        if !used[i] && !b[i].is_zero() {
            return None;
        }
    }
    // back-substitution in reverse pivot order, free unknowns at zero
    let mut x = vec![Rat::zero(); ncols];
    for &(pi, pc) in pivots.iter().rev() {
        let mut acc = b[pi].clone();
        for (c, v) in &rows[pi] {
            if *c != pc {
                acc -= v.clone() * x[*c].clone();
            }
        }
        x[pc] = acc / get(&rows[pi], pc);
    }
    // exact residual check of every original row under x
    for (i, row) in rows.iter().enumerate() {
        let mut resid = -b[i].clone();
        for (c, v) in row {
            resid += v.clone() * x[*c].clone();
        }
        if !resid.is_zero() {
            return None;
        }
    }
    Some(x)
}

/// Ansatz degrees for one generator against a target.
fn coeff_degrees_for(target: &Poly, gen: &Poly, _bound: i64) -> Option<Vec<i64>> {
    match (target.weighted_degree(), gen.weighted_degree()) {
        (Degree::Homogeneous(dt), Degree::Homogeneous(dg)) => {
            let d = dt - dg;
            if d < 0 {
                Some(vec![])
            } else {
                Some(vec![d])
            }
        }
        (Degree::Zero, _) => Some(vec![]),
        _ => None,
    }
}

/// Search for a membership certificate of `target` over `gens` with
/// coefficient degrees forced by the grading when target and generators are
/// weighted-homogeneous, and capped by `coeff_degree_bound` otherwise.
pub fn find_certificate(
    target: &Poly,
    gens: &GeneratorSet,
    coeff_degree_bound: i64,
) -> Result<Option<MembershipCertificate>, AlgebraError> {
    if target.ring() != gens.ring() && **target.ring() != **gens.ring() {
        return Err(AlgebraError::RingMismatch("find_certificate".into()));
    }
    if coeff_degree_bound < 0 {
        return Err(AlgebraError::Precondition("negative degree bound".into()));
    }
    if target.is_zero() {
        let coeffs = vec![Poly::zero(gens.ring()); gens.len()];
        return Ok(Some(MembershipCertificate::checked(
            target.clone(),
            gens,
            coeffs,
            coeff_degree_bound,
        )?));
    }
    let ring = gens.ring();
    // Build ansatz monomial lists per generator.
    let mut ansatz: Vec<Vec<Monomial>> = Vec::with_capacity(gens.len());
    let mut graded = true;
    for g in gens.gens() {
        match coeff_degrees_for(target, g, coeff_degree_bound) {
            Some(degs) => {
                let mut monos = Vec::new();
                for d in degs {
                    monos.extend(monomials_of_weighted_degree(ring, d));
                }
                ansatz.push(monos);
            }
            None => {
                graded = false;
                break;
            }
        }
    }
    if !graded {
        ansatz = gens
            .gens()
            .iter()
            .map(|_| monomials_up_to_weighted_degree(ring, coeff_degree_bound))
            .collect();
    }
    // Unknown per (generator, monomial); column = expansion of mono * gen.
    let mut columns: Vec<BTreeMap<Monomial, Rat>> = Vec::new();
    let mut owners: Vec<(usize, Monomial)> = Vec::new();
    for (gi, g) in gens.gens().iter().enumerate() {
        for m in &ansatz[gi] {
            let mut col = BTreeMap::new();
            for (gm, gc) in g.terms() {
                let key = gm.mul(m);
                let e = col.entry(key).or_insert_with(Rat::zero);
                *e += gc.clone();
            }
            col.retain(|_, v: &mut Rat| !v.is_zero());
            if !col.is_empty() {
                columns.push(col);
                owners.push((gi, m.clone()));
            }
        }
    }
    let rhs: BTreeMap<Monomial, Rat> = target.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let Some(x) = solve_sparse(&columns, &rhs) else {
        return Ok(None);
    };
    let mut coeffs = vec![Poly::zero(ring); gens.len()];
    for (val, (gi, m)) in x.into_iter().zip(owners) {
        if !val.is_zero() {
            coeffs[gi] = coeffs[gi].add_ref(&Poly::from_terms(ring, [(m, val)]));
        }
    }
    Ok(Some(MembershipCertificate::checked(
        target.clone(),
        gens,
        coeffs,
        coeff_degree_bound,
    )?))
}

/// `p ≡ q` modulo the ideal at the bound: a certificate for `p - q`.
pub fn equal_mod_ideal(
    p: &Poly,
    q: &Poly,
    gens: &GeneratorSet,
    bound: i64,
) -> Result<Option<MembershipCertificate>, AlgebraError> {
    find_certificate(&p.sub_ref(q), gens, bound)
}

/// For every generator `g` of `source_gens`, certify that
/// `substitute(g, map)` lies in the ideal spanned by `image_gens`.
pub fn map_preserves(
    map: &PolyMap,
    source_gens: &GeneratorSet,
    image_gens: &GeneratorSet,
    bound: i64,
) -> Result<Option<Vec<MembershipCertificate>>, AlgebraError> {
    let mut certs = Vec::with_capacity(source_gens.len());
    for g in source_gens.gens() {
        let img = g.substitute(map)?;
        match find_certificate(&img, image_gens, bound)? {
            Some(c) => certs.push(c),
            None => return Ok(None),
        }
    }
    Ok(Some(certs))
}

/// Constant matrix `M` with `substitute(polys[k], map) = Σ_l M[k][l] polys[l]`,
/// exactly; `None` if any image leaves the span.
#[derive(Debug, Clone)]
pub struct SpanMatrix {
    pub matrix: RatMatrix,
}

pub fn linear_span_matrix(
    polys: &[Poly],
    map: &PolyMap,
) -> Result<Option<SpanMatrix>, AlgebraError> {
    if polys.is_empty() {
        return Err(AlgebraError::Precondition("empty basis".into()));
    }
    // Column space of the basis: coefficient vectors over the monomial union.
    let mut monos: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut images = Vec::with_capacity(polys.len());
    for p in polys {
        images.push(p.substitute(map)?);
    }
    for p in polys.iter().chain(images.iter()) {
        for (m, _) in p.terms() {
            let next = monos.len();
            monos.entry(m.clone()).or_insert(next);
        }
    }
    let nrows = monos.len();
    let mut basis_mat = RatMatrix::zero(nrows, polys.len());
    for (j, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            basis_mat[(monos[m], j)] = c.clone();
        }
    }
    // precondition: independence
    if basis_mat.rank() != polys.len() {
        return Err(AlgebraError::Precondition(
            "span basis not linearly independent".into(),
        ));
    }
    let mut rows_out = Vec::with_capacity(polys.len());
    for img in &images {
        let mut b = vec![Rat::zero(); nrows];
        for (m, c) in img.terms() {
            b[monos[m]] = c.clone();
        }
        match basis_mat.solve(&b)? {
            Some(x) => rows_out.push(x),
            None => return Ok(None),
        }
    }
    // verify exactness by re-expansion
    for (k, img) in images.iter().enumerate() {
        let mut acc = Poly::zero(polys[0].ring());
        for (l, p) in polys.iter().enumerate() {
            acc = acc.add_ref(&p.scale(&rows_out[k][l]));
        }
        if &acc != img {
            return Ok(None);
        }
    }
    Ok(Some(SpanMatrix {
        matrix: RatMatrix::from_rows(rows_out),
    }))
}

/// Decide whether `p` is a scalar multiple of `q` (for nonzero q); returns
/// the scalar.
pub fn scalar_ratio(p: &Poly, q: &Poly) -> Option<Rat> {
    if q.is_zero() {
        return if p.is_zero() { Some(rat_i(0)) } else { None };
    }
    let (m0, c0) = q.terms().next().unwrap();
    let pc = p.coeff(m0);
    let lambda = pc / c0.clone();
    if p == &q.scale(&lambda) {
        Some(lambda)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::WeightedRing;

    #[test]
    fn simple_certificate() {
        let r = WeightedRing::unweighted(&["x1", "x2"]);
        let target = parse_poly(&r, "x1^2 + x1*x2").unwrap();
        let gens = GeneratorSet::new(vec![parse_poly(&r, "x1").unwrap()]).unwrap();
        let cert = find_certificate(&target, &gens, 1).unwrap().unwrap();
        assert_eq!(cert.coeffs[0], parse_poly(&r, "x1 + x2").unwrap());
        assert!(cert.verify(&gens));
    }

    #[test]
    fn degree_obstruction_returns_none() {
        let r = WeightedRing::unweighted(&["x1"]);
        let target = parse_poly(&r, "x1").unwrap();
        let gens = GeneratorSet::new(vec![parse_poly(&r, "x1^2").unwrap()]).unwrap();
        for bound in 0..4 {
            assert!(find_certificate(&target, &gens, bound).unwrap().is_none());
        }
    }

    #[test]
    fn equal_mod_ideal_negative() {
        let r = WeightedRing::unweighted(&["x1", "x2"]);
        let p = parse_poly(&r, "x1").unwrap();
        let q = parse_poly(&r, "x2").unwrap();
        let gens = GeneratorSet::new(vec![parse_poly(&r, "x1^2").unwrap()]).unwrap();
        assert!(equal_mod_ideal(&p, &q, &gens, 3).unwrap().is_none());
        assert!(equal_mod_ideal(&p, &p, &gens, 0).unwrap().is_some());
    }

    #[test]
    fn span_matrix_of_swap() {
        let r = WeightedRing::unweighted(&["x1", "x2"]);
        let x1 = Poly::var(&r, "x1").unwrap();
        let x2 = Poly::var(&r, "x2").unwrap();
        let swap = PolyMap::new(&r, &r, vec![x2.clone(), x1.clone()]).unwrap();
        let sm = linear_span_matrix(&[x1, x2], &swap).unwrap().unwrap();
        assert_eq!(sm.matrix, RatMatrix::from_i64(&[&[0, 1], &[1, 0]]));
        assert!(sm.matrix.trace().is_zero());
    }

    #[test]
    fn map_preserves_identity() {
        let r = WeightedRing::unweighted(&["x1", "x2"]);
        let gens = GeneratorSet::new(vec![
            parse_poly(&r, "x1^2 - x2").unwrap(),
            parse_poly(&r, "x1*x2").unwrap(),
        ])
        .unwrap();
        let id = PolyMap::identity(&r);
        let certs = map_preserves(&id, &gens, &gens, 0).unwrap().unwrap();
        assert_eq!(certs.len(), 2);
        for c in &certs {
            assert!(c.verify(&gens));
        }
    }

    #[test]
    fn graded_ansatz_matches_full() {
        let r = WeightedRing::new(&[("x", 1), ("y", 1), ("w", 2)]);
        let target = parse_poly(&r, "x^2*w + y^2*w").unwrap();
        let gens = GeneratorSet::new(vec![parse_poly(&r, "w").unwrap()]).unwrap();
        let graded = find_certificate(&target, &gens, 2).unwrap();
        assert!(graded.is_some());
        // force the ungraded path with an inhomogeneous target
        let t2 = parse_poly(&r, "x^2*w + y^2*w + w").unwrap();
        let full = find_certificate(&t2, &gens, 2).unwrap();
        assert!(full.is_some());
    }
}
