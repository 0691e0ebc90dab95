//! Helpers around [`Rational`]: exact parsing, powers, and decimal display.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Parses `"p/q"` or `"p"` exactly. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("malformed rational '{text}': numerator")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("malformed rational '{text}': denominator")))?;
    if den.is_zero() {
        return Err(Error::parse(format!(
            "malformed rational '{text}': zero denominator"
        )));
    }
    Ok(Rational::new(num, den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big_pow(base: u32, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

pub fn biguint_pow(base: u32, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

/// `base^(-exp)` as an exact rational.
pub fn inv_pow(base: u32, exp: usize) -> Rational {
    Rational::new(BigInt::one(), big_pow(base, exp))
}

pub fn in_unit_interval(x: &Rational) -> bool {
    !x.is_negative() && *x <= Rational::one()
}

/// Truncated decimal rendering with `places` fractional digits, computed exactly.
pub fn to_decimal(x: &Rational, places: usize) -> String {
    let neg = x.is_negative();
    let abs = x.abs();
    let scale = num_traits::pow(BigInt::from(10u32), places);
    let scaled = (abs.numer() * &scale).div_floor(abs.denom());
    let (whole, frac) = scaled.div_rem(&scale);
    let mut out = String::new();
    if neg && !scaled.is_zero() {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if places > 0 {
        let digits = frac.to_string();
        out.push('.');
        out.extend(std::iter::repeat_n('0', places - digits.len()));
        out.push_str(&digits);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("2/27").unwrap(), ratio(2, 27));
        assert_eq!(parse_rational(" -4/6 ").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("1").unwrap(), int(1));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(parse_rational("0.5").unwrap_err().is_parse());
        assert!(parse_rational("1/0").unwrap_err().is_parse());
        assert!(parse_rational("").unwrap_err().is_parse());
    }

    #[test]
    fn decimal_rendering_truncates() {
        assert_eq!(to_decimal(&ratio(2, 3), 4), "0.6666");
        assert_eq!(to_decimal(&ratio(-2, 3), 3), "-0.666");
        assert_eq!(to_decimal(&int(1), 2), "1.00");
        assert_eq!(to_decimal(&ratio(1, 100), 1), "0.0");
    }
}
