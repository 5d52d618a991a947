//! Exact rational scalars and small combinatorial helpers.
//!
//! Every computation in this crate runs over arbitrary-precision rationals;
//! floating point never enters any identity check. The convention `0^0 = 1`
//! is adopted globally so that closed-form matrix entries like
//! `s^|I\J| (u+st)^|I∩J| t^|J\I|` specialize correctly at zero parameters.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// The integer `k` as a rational.
pub fn rat_int(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// The fraction `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer power with the global convention `0^0 = 1`.
///
/// Negative exponents invert; a negative exponent on zero is a caller bug.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    assert!(
        !base.is_zero() || exp > 0,
        "zero base with negative exponent"
    );
    let mag = base.pow(i32::try_from(exp.unsigned_abs()).expect("exponent fits i32"));
    if exp < 0 {
        mag.recip()
    } else {
        mag
    }
}

/// Formats a rational as `p` when the denominator is 1 and `p/q` otherwise.
///
/// `num`'s own `Display` already does this, but matrix emission is a
/// byte-level interface, so the crate pins the format here.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` (optional leading `-`, ASCII digits) into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
        Some((ps, qs)) => {
            let p: BigInt = ps.trim().parse().map_err(|_| bad())?;
            let q: BigInt = qs.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Binomial coefficient over machine integers; zero when `b > a`.
///
/// Arguments stay below 64 in this crate, so `u128` intermediates never
/// overflow.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for t in 0..b {
        acc = acc * (a - t) as u128 / (t + 1) as u128;
    }
    acc as u64
}

/// Binomial with the convention `C(a, b) = 0` for `b < 0`.
///
/// In label arithmetic the lower index can be `-1`; the upper index is
/// always a genuine size, so negative `a` is rejected as a caller bug.
pub fn binomial_i(a: i64, b: i64) -> u64 {
    assert!(a >= 0, "negative upper binomial index");
    if b < 0 {
        return 0;
    }
    binomial(a as u64, b as u64)
}

/// Binomial coefficient as a rational.
pub fn binomial_rat(a: u64, b: u64) -> Rat {
    rat_int(binomial(a, b) as i64)
}

/// Factorial as a rational (exact for any `k` we use).
pub fn factorial_rat(k: usize) -> Rat {
    let mut acc = Rat::one();
    for t in 2..=k {
        acc *= rat_int(t as i64);
    }
    acc
}

/// `true` when the rational is a nonnegative integer.
pub fn is_nonneg_int(r: &Rat) -> bool {
    r.denom().is_one() && !r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_zero_conventions() {
        assert_eq!(rat_pow(&rat_int(0), 0), rat_int(1));
        assert_eq!(rat_pow(&rat_int(0), 3), rat_int(0));
        assert_eq!(rat_pow(&rat(2, 3), -2), rat(9, 4));
        assert_eq!(rat_pow(&rat_int(-2), 3), rat_int(-8));
    }

    #[test]
    fn format_and_parse_round_trip() {
        for r in [rat_int(0), rat_int(-7), rat(1, 2), rat(-22, 7)] {
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&rat(4, 2)), "2");
        assert_eq!(format_rat(&rat(-1, 3)), "-1/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn binomial_table() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial_i(4, -1), 0);
        assert_eq!(binomial_i(4, 2), 6);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial_rat(0), rat_int(1));
        assert_eq!(factorial_rat(5), rat_int(120));
    }
}
