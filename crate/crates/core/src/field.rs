//! Coefficient field abstraction.
//!
//! The whole kernel is generic over the coefficient field: the rationals for
//! input germs, and simple algebraic extension towers (see [`crate::alg`])
//! once a blow-up center or a Newton polygon edge forces an irrational
//! coordinate. Only exact fields implement this trait; there is deliberately
//! no floating-point instantiation.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{Int, Rat};

/// An exact field of characteristic zero.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Embed a rational number.
    fn from_rat(r: &Rat) -> Self;

    /// Exact division.
    fn div_exact(&self, rhs: &Self) -> Self {
        self.clone() * rhs.inv()
    }

    /// A deterministic total-order key used for canonical orderings only
    /// (it has no algebraic meaning for extension elements).
    fn order_key(&self) -> Vec<Int>;

    /// Human-readable rendering used by polynomial display.
    fn render(&self) -> String;

    /// True if the element is a rational number (in the base field).
    fn as_rat(&self) -> Option<Rat>;
}

impl Field for Rat {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn order_key(&self) -> Vec<Int> {
        vec![self.numer().clone(), self.denom().clone()]
    }

    fn render(&self) -> String {
        format_rat(self)
    }

    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

/// Floor of a rational as an integer.
pub fn rat_floor(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Ceiling of a rational as an integer.
pub fn rat_ceil(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Parse an exact rational from `p` or `p/q` notation.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: Int = num
        .parse()
        .map_err(|_| format!("invalid integer `{num}`"))?;
    let d: Int = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid integer `{d}`"))?,
        None => Int::from(1),
    };
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rat::new(n, d))
}

/// Render a rational as `p` or `p/q` (always lowest terms, denominator > 0).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["0", "5", "-3", "5/2", "-7/3"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/6").map(|r| format_rat(&r)).unwrap(), "2/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn floor_ceil_exact() {
        assert_eq!(rat_floor(&rat(7, 2)), Int::from(3));
        assert_eq!(rat_ceil(&rat(7, 2)), Int::from(4));
        assert_eq!(rat_floor(&rat(-7, 2)), Int::from(-4));
        assert_eq!(rat_ceil(&rat(-7, 2)), Int::from(-3));
        assert_eq!(rat_floor(&rat_int(5)), Int::from(5));
        assert_eq!(rat_ceil(&rat_int(5)), Int::from(5));
    }
}
