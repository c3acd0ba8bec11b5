//! Weighted multivariate polynomial rings over exact rationals.
//!
//! A `Poly` is a canonical sparse map from monomials to nonzero rational
//! coefficients; two polynomials are equal iff their term maps are equal.
//! Monomials are ordered graded-lexicographically (total exponent sum first,
//! then the exponent vector), which fixes the serialization order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;
use smallvec::SmallVec;
use thiserror::Error;

use crate::rational::{fmt_rat, rat_i, Rat};
use crate::symbol::Symbol;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed index set")]
    BadIndexSet,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0}")]
    Precondition(String),
}

/// A polynomial ring with named variables, each carrying a positive weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedRing {
    vars: Vec<Symbol>,
    weights: Vec<u64>,
}

pub type Ring = Arc<WeightedRing>;

impl WeightedRing {
    /// Build a ring from `(name, weight)` pairs. Names must be unique and
    /// weights positive.
    pub fn new(vars: &[(&str, u64)]) -> Ring {
        let mut seen = Vec::new();
        let mut syms = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            assert!(*w > 0, "weights must be positive: {name}");
            assert!(!seen.contains(name), "duplicate variable {name}");
            seen.push(name);
            syms.push(Symbol::intern(name));
            weights.push(*w);
        }
        Arc::new(WeightedRing {
            vars: syms,
            weights,
        })
    }

    /// All variables weight 1.
    pub fn unweighted(names: &[&str]) -> Ring {
        let vars: Vec<(&str, u64)> = names.iter().map(|n| (*n, 1)).collect();
        Self::new(&vars)
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn var_names(&self) -> Vec<String> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        let sym = Symbol::intern(name);
        self.vars.iter().position(|v| *v == sym)
    }

    pub fn symbol(&self, ix: usize) -> Symbol {
        self.vars[ix]
    }
}

fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Exponent vector; length always equals the ring arity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub SmallVec<[u16; 20]>);

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn var(arity: usize, ix: usize) -> Monomial {
        let mut m = Self::one(arity);
        m.0[ix] = 1;
        m
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|e| *e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(e, w)| *e as u64 * *w)
            .sum()
    }

    /// Weighted degree against an arbitrary (possibly negative) weight row.
    pub fn degree_with(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(e, w)| *e as i64 * *w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Weighted-homogeneity classification of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    /// The zero polynomial (homogeneous of every degree).
    Zero,
    /// All terms share this weighted degree.
    Homogeneous(i64),
    /// Terms of differing weighted degrees.
    Inhomogeneous,
}

/// Sparse polynomial in canonical form: no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rat) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.arity()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Poly {
        Self::constant(ring, rat_i(1))
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Poly, AlgebraError> {
        let ix = ring
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        Ok(Self::var_ix(ring, ix))
    }

    pub fn var_ix(ring: &Ring, ix: usize) -> Poly {
        let mut p = Poly::zero(ring);
        p.terms.insert(Monomial::var(ring.arity(), ix), rat_i(1));
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(ring: &Ring, it: I) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().total_degree() == 0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Monomial::one(self.ring.arity()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Poly) -> Result<(), AlgebraError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring.var_names(),
                other.ring.var_names()
            )))
        }
    }

    pub fn add_ref(&self, other: &Poly) -> Poly {
        self.check_same_ring(other).expect("poly add: ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Poly) -> Poly {
        self.check_same_ring(other).expect("poly sub: ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul_ref(&self, other: &Poly) -> Poly {
        self.check_same_ring(other).expect("poly mul: ring mismatch");
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn neg_ref(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        out
    }

    pub fn scale_i(&self, n: i64) -> Poly {
        self.scale(&rat_i(n))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(&self.ring);
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Weighted-homogeneity with respect to the ring's own weights.
    pub fn weighted_degree(&self) -> Degree {
        let w: Vec<i64> = self.ring.weights().iter().map(|x| *x as i64).collect();
        self.degree_with(&w)
    }

    /// Weighted-homogeneity against an arbitrary weight row.
    pub fn degree_with(&self, weights: &[i64]) -> Degree {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Degree::Zero,
            Some(m) => m.degree_with(weights),
        };
        for m in it {
            if m.degree_with(weights) != first {
                return Degree::Inhomogeneous;
            }
        }
        Degree::Homogeneous(first)
    }

    /// Exact evaluation at a rational point (one value per ring variable).
    pub fn evaluate(&self, point: &[Rat]) -> Result<Rat, AlgebraError> {
        if point.len() != self.ring.arity() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.ring.arity(),
                got: point.len(),
            });
        }
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (ix, e) in m.0.iter().enumerate() {
                for _ in 0..*e {
                    v *= point[ix].clone();
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Formal partial derivative with respect to variable `ix`.
    pub fn derivative(&self, ix: usize) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[ix];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[ix] = e - 1;
            out.add_term(m2, c.clone() * rat_i(e as i64));
        }
        out
    }

    /// Ring homomorphism image under `map` (this poly must live in the
    /// map's source ring).
    pub fn substitute(&self, map: &PolyMap) -> Result<Poly, AlgebraError> {
        if !same_ring(&self.ring, &map.source) {
            return Err(AlgebraError::RingMismatch(
                "substitute: poly not in map source ring".into(),
            ));
        }
        let n = self.ring.arity();
        // cache powers of each assignment
        let mut powers: Vec<Vec<Poly>> = (0..n).map(|_| Vec::new()).collect();
        let mut out = Poly::zero(&map.target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&map.target, c.clone());
            for (ix, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let cache = &mut powers[ix];
                while cache.len() < *e as usize {
                    let next = if cache.is_empty() {
                        map.assignment[ix].clone()
                    } else {
                        cache.last().unwrap().mul_ref(&map.assignment[ix])
                    };
                    cache.push(next);
                }
                term = term.mul_ref(&cache[*e as usize - 1]);
            }
            out = out.add_ref(&term);
        }
        Ok(out)
    }

    /// Deterministic plain-text form, terms in descending canonical order.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let names = self.ring.var_names();
        let mut parts = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            factors.push(fmt_rat(c));
            for (ix, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[ix].clone()),
                    _ => factors.push(format!("{}^{}", names[ix], e)),
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

macro_rules! impl_binop {
    ($trait:ident, $fn:ident, $inner:ident) => {
        impl<'a, 'b> $trait<&'b Poly> for &'a Poly {
            type Output = Poly;
            fn $fn(self, rhs: &'b Poly) -> Poly {
                self.$inner(rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $fn(self, rhs: Poly) -> Poly {
                self.$inner(&rhs)
            }
        }
        impl<'b> $trait<&'b Poly> for Poly {
            type Output = Poly;
            fn $fn(self, rhs: &'b Poly) -> Poly {
                self.$inner(rhs)
            }
        }
        impl<'a> $trait<Poly> for &'a Poly {
            type Output = Poly;
            fn $fn(self, rhs: Poly) -> Poly {
                self.$inner(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_ref);
impl_binop!(Sub, sub, sub_ref);
impl_binop!(Mul, mul, mul_ref);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}

/// A substitution assignment: one target-ring polynomial per source-ring
/// variable. Represents the pullback of a (possibly nonlinear) map.
#[derive(Debug, Clone)]
pub struct PolyMap {
    pub source: Ring,
    pub target: Ring,
    pub assignment: Vec<Poly>,
    /// When set to `Some(k)`, each assigned poly is weighted-homogeneous of
    /// the source variable's weight times `k` (or zero).
    pub graded_scale: Option<i64>,
}

impl PolyMap {
    pub fn new(source: &Ring, target: &Ring, assignment: Vec<Poly>) -> Result<PolyMap, AlgebraError> {
        if assignment.len() != source.arity() {
            return Err(AlgebraError::ArityMismatch {
                expected: source.arity(),
                got: assignment.len(),
            });
        }
        for p in &assignment {
            if !same_ring(p.ring(), target) {
                return Err(AlgebraError::RingMismatch(
                    "polymap assignment not in target ring".into(),
                ));
            }
        }
        let mut map = PolyMap {
            source: source.clone(),
            target: target.clone(),
            assignment,
            graded_scale: None,
        };
        map.graded_scale = map.detect_scale();
        Ok(map)
    }

    /// The identity map of a ring.
    pub fn identity(ring: &Ring) -> PolyMap {
        let assignment = (0..ring.arity()).map(|i| Poly::var_ix(ring, i)).collect();
        PolyMap::new(ring, ring, assignment).unwrap()
    }

    fn detect_scale(&self) -> Option<i64> {
        let mut scale: Option<i64> = None;
        for (ix, p) in self.assignment.iter().enumerate() {
            let w = self.source.weights()[ix] as i64;
            match p.weighted_degree() {
                Degree::Zero => continue,
                Degree::Inhomogeneous => return None,
                Degree::Homogeneous(d) => {
                    if d % w != 0 {
                        return None;
                    }
                    let k = d / w;
                    match scale {
                        None => scale = Some(k),
                        Some(k0) if k0 == k => {}
                        _ => return None,
                    }
                }
            }
        }
        scale.or(Some(1))
    }

    /// Whether each assigned poly is weighted-homogeneous of the source
    /// weight times a common scale.
    pub fn is_graded(&self) -> bool {
        self.graded_scale.is_some()
    }

    /// Pullback composition for point maps: if `self` and `inner` represent
    /// point maps F and G on the same ring, the result represents F∘G
    /// (apply G first). Substitution-wise each assignment of F is pushed
    /// through G's assignment.
    pub fn after(&self, inner: &PolyMap) -> Result<PolyMap, AlgebraError> {
        if !same_ring(&self.target, &inner.source) {
            return Err(AlgebraError::RingMismatch("polymap composition".into()));
        }
        let assignment = self
            .assignment
            .iter()
            .map(|p| p.substitute(inner))
            .collect::<Result<Vec<_>, _>>()?;
        PolyMap::new(&self.source, &inner.target, assignment)
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly, AlgebraError> {
        p.substitute(self)
    }

    /// Exact equality of assignments.
    pub fn equals(&self, other: &PolyMap) -> bool {
        self.assignment == other.assignment
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn xy_ring() -> Ring {
        WeightedRing::new(&[("x1", 1), ("y1", 1)])
    }

    #[test]
    fn difference_of_squares() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        let y = Poly::var(&r, "y1").unwrap();
        let lhs = (&x + &y) * (&x - &y);
        let rhs = &x * &x - &y * &y;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_inverse_is_empty() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn binomial_substitution() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        let y = Poly::var(&r, "y1").unwrap();
        let m = PolyMap::new(&r, &r, vec![&x + &y, y.clone()]).unwrap();
        let img = x.pow(2).substitute(&m).unwrap();
        let expect = x.pow(2) + (&x * &y).scale_i(2) + y.pow(2);
        assert_eq!(img, expect);
    }

    #[test]
    fn identity_map_fixes() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        let y = Poly::var(&r, "y1").unwrap();
        let p = &x * &x + (&x * &y).scale(&rat(7, 3)) - Poly::one(&r);
        let id = PolyMap::identity(&r);
        assert_eq!(p.substitute(&id).unwrap(), p);
    }

    #[test]
    fn weighted_degree_markers() {
        let r = WeightedRing::new(&[("a", 1), ("b", 2)]);
        let a = Poly::var(&r, "a").unwrap();
        let b = Poly::var(&r, "b").unwrap();
        assert_eq!(b.pow(2).weighted_degree(), Degree::Homogeneous(4));
        assert_eq!((&a + &b).weighted_degree(), Degree::Inhomogeneous);
        assert_eq!((a.pow(2) + b.clone()).weighted_degree(), Degree::Homogeneous(2));
        assert_eq!(Poly::zero(&r).weighted_degree(), Degree::Zero);
    }

    #[test]
    fn evaluation_is_exact() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        let y = Poly::var(&r, "y1").unwrap();
        let p = &x * &y - x.pow(2).scale(&rat(1, 3));
        let v = p.evaluate(&[rat(1, 2), rat(2, 3)]).unwrap();
        assert_eq!(v, rat(1, 3) - rat(1, 12));
        assert!(p.evaluate(&[rat_i(1)]).is_err());
    }

    #[test]
    fn derivative_power_rule() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        assert_eq!(x.pow(2).derivative(0), x.scale_i(2));
        assert!(Poly::one(&r).derivative(0).is_zero());
    }

    #[test]
    fn text_form_is_deterministic() {
        let r = xy_ring();
        let x = Poly::var(&r, "x1").unwrap();
        let y = Poly::var(&r, "y1").unwrap();
        let p = &x * &x - (&x * &y).scale(&rat(1, 2)) + Poly::constant(&r, rat_i(3));
        assert_eq!(p.to_text(), "1*x1^2 + -1/2*x1*y1 + 3");
    }
}
