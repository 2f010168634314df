//! Exact rational arithmetic helpers.
//!
//! Every quantity in this crate (ballot weights, matrix entries, degrees
//! of belief, margins) is a [`Rat`]. Ties and margin boundaries are
//! semantically meaningful, so floating point is never used.

use alloc::string::{String, ToString};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn half() -> Rat {
    rat(1, 2)
}

/// Renders a rational in the canonical `num/den` form, e.g. `3/5`, `-1/2`,
/// `4/1`. The denominator is always positive and the fraction reduced.
pub fn format_rat(r: &Rat) -> String {
    let mut s = r.numer().to_string();
    s.push('/');
    s.push_str(&r.denom().to_string());
    s
}

/// Parses a rational from `num/den` (`3/5`), integer (`7`, `-2`) or plain
/// decimal (`4.75`, `0.3`) notation.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int_part).ok()?
        };
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let frac = BigInt::from_str(frac_part).ok()?;
        let numer = int_part.abs() * &scale + frac;
        let numer = if negative { -numer } else { numer };
        return Some(Rat::new(numer, scale));
    }
    BigInt::from_str(s).ok().map(Rat::from_integer)
}
