//! Exact rationals: parsing from files, and presentation rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `numer / denom` as an exact rational. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, an integer, or a decimal such as `"0.2"` / `"-1.5e-2"`
/// into an exact rational. Decimals are never routed through floats.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i32 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer: BigInt = all_digits.parse().map_err(|_| bad())?;
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(if negative { -value } else { value })
}

/// Rounds half away from zero to `digits` decimal places.
pub fn round_half_away(value: &Rational, digits: u32) -> Rational {
    let scale = Rational::from_integer(num_traits::pow(BigInt::from(10), digits as usize));
    // Ratio::round rounds half-way cases away from zero.
    (value * &scale).round() / scale
}

/// Fixed-point rendering with exactly `digits` decimals, half away from zero.
pub fn format_rounded(value: &Rational, digits: u32) -> String {
    let rounded = round_half_away(value, digits);
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let scaled = (rounded * Rational::from_integer(scale.clone())).to_integer();
    let negative = scaled.is_negative();
    let magnitude = scaled.abs();
    let int_part = &magnitude / &scale;
    let frac_part = &magnitude % &scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part.to_string(),
            width = digits as usize
        )
    }
}

/// `p/q` in lowest terms, or just `p` for integers.
pub fn format_exact(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals_exactly() {
        assert_eq!(parse_rational("1/5").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational("0.2").unwrap(), ratio(1, 5));
        assert_eq!(parse_rational(" 0.90 ").unwrap(), ratio(9, 10));
        assert_eq!(parse_rational("1").unwrap(), one());
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("25e-2").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("1.5E1").unwrap(), ratio(15, 1));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "abc", "0.2.3", "1/x", ".", "-", "1e"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn rounding_is_half_away_from_zero() {
        assert_eq!(format_rounded(&ratio(1, 19), 2), "0.05");
        assert_eq!(format_rounded(&ratio(9, 19), 2), "0.47");
        assert_eq!(format_rounded(&ratio(24, 69), 2), "0.35");
        assert_eq!(format_rounded(&ratio(1, 8), 2), "0.13");
        assert_eq!(format_rounded(&ratio(-1, 8), 2), "-0.13");
        assert_eq!(format_rounded(&ratio(1, 1), 2), "1.00");
        assert_eq!(format_rounded(&ratio(5, 2), 0), "3");
        assert_eq!(format_rounded(&ratio(1, 200), 2), "0.01");
        assert_eq!(format_rounded(&ratio(37, 69), 2), "0.54");
    }

    #[test]
    fn exact_format() {
        assert_eq!(format_exact(&ratio(10, 138)), "5/69");
        assert_eq!(format_exact(&ratio(4, 2)), "2");
        assert_eq!(format_exact(&zero()), "0");
    }
}
