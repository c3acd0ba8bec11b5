//! Exact rational scalars.
//!
//! Every coefficient in this crate is a `BigRational`: identities are checked
//! by exact equality, never by tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer as an exact rational.
pub fn rat_i(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_zero() -> Rat {
    Rat::zero()
}

pub fn rat_one() -> Rat {
    Rat::one()
}

/// Parse "3", "-7/2", "1/30".
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

/// Deterministic plain-text form: `n` for integers, `n/d` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Absolute value, used by pivoting heuristics.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("1/30").unwrap(), rat(1, 30));
        assert_eq!(parse_rat("-7/2").unwrap(), rat(-7, 2));
        assert_eq!(parse_rat(" 12 ").unwrap(), rat_i(12));
        assert_eq!(fmt_rat(&rat(4, 6)), "2/3");
        assert_eq!(fmt_rat(&rat_i(-5)), "-5");
        assert!(parse_rat("1/0").is_none());
    }
}
