//! Exact dense linear algebra over the rationals, and polynomial matrices.
//!
//! Elimination is fraction-free in the Bareiss style: rows are cleared of
//! denominators and pivoting divisions stay exact over the integers, which
//! bounds intermediate growth on the certificate systems this crate solves.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{rat_i, Rat};
use crate::ring::{AlgebraError, Poly, PolyMap, Ring};

/// Dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = rat_i(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> RatMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> RatMatrix {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|v| rat_i(*v)).collect())
                .collect(),
        )
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = self[(i, k)].clone() * other[(k, j)].clone();
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)].clone() * v[j].clone())
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Integer matrix with rows cleared of denominators (rank-preserving).
    fn to_int_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut lcm = BigInt::one();
            for j in 0..self.cols {
                let d = self[(i, j)].denom();
                lcm = num_integer::lcm(lcm, d.clone());
            }
            out.push(
                (0..self.cols)
                    .map(|j| {
                        let v = &self[(i, j)];
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect(),
            );
        }
        out
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.to_int_rows();
        bareiss_rank(&mut m)
    }

    /// Exact determinant (square matrices), via cofactor expansion for tiny
    /// sizes and Bareiss for the rest.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "det of non-square");
        let n = self.rows;
        if n == 0 {
            return rat_i(1);
        }
        if n <= 3 {
            return det_small(self);
        }
        // Bareiss on rationals directly (sizes here are small).
        let mut m: Vec<Vec<Rat>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign = 1i64;
        let mut prev = rat_i(1);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m[k][k].clone() * m[i][j].clone()
                        - m[i][k].clone() * m[k][j].clone())
                        / prev.clone();
                    m[i][j] = v;
                }
                m[i][k] = Rat::zero();
            }
            prev = m[k][k].clone();
        }
        m[n - 1][n - 1].clone() * rat_i(sign)
    }

    /// A particular solution of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, AlgebraError> {
        if b.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "solve: {} rows vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut rows: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.push(b[i].clone());
                r
            })
            .collect();
        let n = self.cols;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = rows[rank][col].clone();
            for j in col..=n {
                let v = rows[rank][j].clone() / inv.clone();
                rows[rank][j] = v;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in col..=n {
                        let v = rows[r][j].clone() - f.clone() * rows[rank][j].clone();
                        rows[r][j] = v;
                    }
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        // inconsistency: a zero row with nonzero rhs
        for r in rank..rows.len() {
            if !rows[r][n].is_zero() {
                return Ok(None);
            }
        }
        let mut x = vec![Rat::zero(); n];
        for (r, c) in pivots {
            x[c] = rows[r][n].clone();
        }
        Ok(Some(x))
    }

    /// A basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let n = self.cols;
        let mut rows: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i)).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..n {
            let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = rows[rank][col].clone();
            for j in col..n {
                let v = rows[rank][j].clone() / inv.clone();
                rows[rank][j] = v;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for j in col..n {
                        let v = rows[r][j].clone() - f.clone() * rows[rank][j].clone();
                        rows[r][j] = v;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![Rat::zero(); n];
            v[fc] = rat_i(1);
            for (prow, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[prow][fc].clone();
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

fn det_small(m: &RatMatrix) -> Rat {
    match m.rows {
        1 => m[(0, 0)].clone(),
        2 => m[(0, 0)].clone() * m[(1, 1)].clone() - m[(0, 1)].clone() * m[(1, 0)].clone(),
        3 => {
            let a = |i: usize, j: usize| m[(i, j)].clone();
            a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
                - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
                + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
        }
        _ => unreachable!(),
    }
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    let mut col = 0usize;
    while rank < rows && col < cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            col += 1;
            continue;
        };
        m.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = (&m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        col += 1;
    }
    rank
}

/// Rectangular matrix of polynomials over a shared ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(ring: &Ring, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            data: vec![Poly::zero(ring); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> PolyMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        self.data[0].ring()
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let ring = self.data[0].ring().clone();
        let mut out = Self::zero(&ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = self[(i, k)].mul_ref(&other[(k, j)]);
                    let cur = out[(i, j)].add_ref(&add);
                    out[(i, j)] = cur;
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = out[(i, j)].sub_ref(&other[(i, j)]);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    /// First nonzero entry, if any — used for failure reporting.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &Poly)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() {
                    return Some((i, j, &self[(i, j)]));
                }
            }
        }
        None
    }

    /// Exact evaluation into a rational matrix.
    pub fn evaluate(&self, point: &[Rat]) -> Result<RatMatrix, AlgebraError> {
        let mut out = RatMatrix::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].evaluate(point)?;
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, map: &PolyMap) -> Result<PolyMatrix, AlgebraError> {
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(self[(i, j)].substitute(map)?);
            }
            rows.push(row);
        }
        Ok(PolyMatrix::from_rows(rows))
    }
}

impl std::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;
    fn index(&self, (i, j): (usize, usize)) -> &Poly {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly {
        &mut self.data[i * self.cols + j]
    }
}

/// Jacobian matrix: entry `(i, j)` is `∂polys[i]/∂var_j` over all ring
/// variables.
pub fn jacobian(polys: &[Poly]) -> PolyMatrix {
    assert!(!polys.is_empty());
    let ring = polys[0].ring().clone();
    let rows = polys
        .iter()
        .map(|p| (0..ring.arity()).map(|j| p.derivative(j)).collect())
        .collect();
    PolyMatrix::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::ring::WeightedRing;

    #[test]
    fn rank_of_proportional_rows_is_one() {
        let m = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn identity_solve_is_unique_zero() {
        let m = RatMatrix::identity(3);
        let sol = m.solve(&[Rat::zero(), Rat::zero(), Rat::zero()]).unwrap();
        assert_eq!(sol, Some(vec![Rat::zero(); 3]));
        assert!(m.nullspace().is_empty());
    }

    #[test]
    fn inconsistent_system_returns_none() {
        let m = RatMatrix::from_i64(&[&[1, 1], &[1, 1]]);
        let sol = m.solve(&[rat_i(1), rat_i(2)]).unwrap();
        assert!(sol.is_none());
    }

    #[test]
    fn nullspace_dimension_matches_rank() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let img = m.mul_vec(v);
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn det_matches_rank() {
        let m = RatMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ]);
        assert_eq!(m.det(), rat(1, 10) - rat(1, 12));
        let singular = RatMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(singular.det().is_zero());
    }

    #[test]
    fn jacobian_of_constants_is_zero() {
        let r = WeightedRing::unweighted(&["a", "b"]);
        let j = jacobian(&[Poly::one(&r), Poly::constant(&r, rat(5, 2))]);
        assert!(j.is_zero());
    }
}
