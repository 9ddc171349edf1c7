//! Small helpers around `rug::Float`/`rug::Rational`.
//!
//! Convention used throughout the crate: *solver* paths run on MPFR floats at
//! a caller-chosen precision (default 200 bits, ~60 decimal digits) and keep
//! anything that must be exact — bisection bracket endpoints, convergents,
//! parameters parsed from the command line — as `rug::Rational`. Measurement
//! sweeps that only need hardware floats use the `f64` kernels in [`crate::map`].

use crate::{Error, Result};
use rug::float::Constant;
use rug::{Float, Integer, Rational};

/// Default working precision for solver paths: ~60 significant decimal digits.
pub const DEFAULT_SOLVER_BITS: u32 = 200;

const LOG2_10: f64 = 3.321928094887362;

/// Bits needed to carry `digits` significant decimal digits, plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * LOG2_10).ceil() as u32 + 16
}

/// Decimal digits faithfully represented by `bits` of mantissa.
pub fn digits_for_bits(bits: u32) -> u32 {
    (bits as f64 / LOG2_10).floor() as u32
}

pub fn real(prec: u32, x: f64) -> Float {
    Float::with_val(prec, x)
}

pub fn real_q(prec: u32, x: &Rational) -> Float {
    Float::with_val(prec, x)
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Exact rational value of a finite float (dyadic, lossless).
pub fn exact(x: &Float) -> Rational {
    x.to_rational()
        .expect("exact() called on a non-finite float")
}

/// Reduce to `[0, 1)` by subtracting the floor.
pub fn frac_mod1(x: &Float) -> Float {
    let f = x.clone().floor();
    x.clone() - f
}

/// Reduce a rational to `[0, 1)`.
pub fn rational_mod1(q: &Rational) -> Rational {
    let f = q.clone().floor();
    q.clone() - f
}

/// Decimal rendering with enough digits to reconstruct the float exactly
/// at its own precision.
pub fn dec_str(x: &Float) -> String {
    let digits = digits_for_bits(x.prec()) as usize + 3;
    x.to_string_radix(10, Some(digits))
}

/// Parse an exact rational from `p/q`, plain decimal (`0.25`), or scientific
/// notation (`1e-20`, `2.5e3`). The result is exact, not rounded.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if s.contains('/') {
        return s
            .parse::<Rational>()
            .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")));
    }
    // Split off an exponent part if present.
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = s[i + 1..]
                .parse()
                .map_err(|e| Error::Parse(format!("bad exponent in {s:?}: {e}")))?;
            (&s[..i], exp)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(i) => (&digits[..i], &digits[i + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("no digits in {s:?}")));
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(Error::Parse(format!("bad decimal {s:?}")));
    }
    let joined = format!("{int_part}{frac_part}");
    let num: Integer = joined
        .parse()
        .map_err(|e| Error::Parse(format!("bad digits in {s:?}: {e}")))?;
    let shift = exp - frac_part.len() as i64;
    let mut val = Rational::from((num * sign, Integer::from(1)));
    let ten = Integer::from(10);
    if shift >= 0 {
        val *= Rational::from((ten.pow(shift as u32), Integer::from(1)));
    } else {
        val *= Rational::from((Integer::from(1), ten.pow((-shift) as u32)));
    }
    Ok(val)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), Rational::from((3, 4)));
        assert_eq!(parse_rational("0.25").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_rational("3.5").unwrap(), Rational::from((7, 2)));
        assert_eq!(
            parse_rational("1e-20").unwrap(),
            Rational::from((Integer::from(1), Integer::from(10).pow(20)))
        );
        assert_eq!(parse_rational("-2.5e3").unwrap(), Rational::from((-2500, 1)));
        assert_eq!(parse_rational("1000").unwrap(), Rational::from((1000, 1)));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn exact_roundtrip() {
        let x = real(128, 0.1) + real(128, 0.7);
        let q = exact(&x);
        let back = real_q(128, &q);
        assert_eq!(x, back, "float -> rational -> float must be lossless");
    }

    #[test]
    fn mod1_reduction() {
        let x = real(64, -0.25);
        assert_eq!(frac_mod1(&x).to_f64(), 0.75);
        assert_eq!(
            rational_mod1(&Rational::from((-5, 4))),
            Rational::from((3, 4))
        );
    }
}
