//! Exact rational scalars and a few numeric helpers.
//!
//! All probabilities, residues, and identity checks in this crate live in
//! [`Rational`] (= `num_rational::BigRational`). Decimal output exists only
//! at display boundaries and is produced by [`to_decimal`] with
//! round-half-even, never by going through floating point.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"num/den"` or a plain integer, tolerating surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parse_int = |x: &str| -> Result<BigInt> {
        x.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer: {x:?}")))
    };
    let r = match t.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {t:?}")));
            }
            Rational::new(parse_int(n)?, den)
        }
        None => Rational::from_integer(parse_int(t)?),
    };
    Ok(r)
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// The exact square root of a nonnegative rational, when one exists.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// Fixed-point decimal rendering with round-half-even ties.
pub fn to_decimal(r: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let num = r.numer() * &scale;
    let den = r.denom();
    let (mut q, rem) = num_integer::Integer::div_rem(&num.abs(), &den.abs());
    let twice = &rem * 2;
    let den_abs = den.abs();
    if twice > den_abs || (twice == den_abs && num_integer::Integer::is_odd(&q)) {
        q += 1;
    }
    let sign = if r.is_negative() && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{q}");
    }
    let (int_part, frac_part) = num_integer::Integer::div_rem(&q, &scale);
    format!("{sign}{int_part}.{frac_part:0width$}", width = digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        assert_eq!(parse_rational("3/16").unwrap(), Rational::new(3.into(), 16.into()));
        assert_eq!(parse_rational(" -1 ").unwrap(), rat(-1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&Rational::new(1.into(), 4.into())), Some(Rational::new(1.into(), 2.into())));
        assert_eq!(sqrt_exact(&rat(0)), Some(rat(0)));
        assert_eq!(sqrt_exact(&rat(2)), None);
        assert_eq!(sqrt_exact(&rat(-4)), None);
    }

    #[test]
    fn decimal_rounding_is_half_even() {
        // 1/8 = 0.125 -> two digits: tie on the trailing 5, round to even 0.12
        assert_eq!(to_decimal(&Rational::new(1.into(), 8.into()), 2), "0.12");
        // 3/8 = 0.375 -> 0.38 (3.75 ties to even 38)
        assert_eq!(to_decimal(&Rational::new(3.into(), 8.into()), 2), "0.38");
        assert_eq!(to_decimal(&Rational::new(1.into(), 3.into()), 6), "0.333333");
        assert_eq!(to_decimal(&Rational::new((-1).into(), 2.into()), 3), "-0.500");
        assert_eq!(to_decimal(&rat(2), 2), "2.00");
    }
}
