//! Arbitrary-precision rational scalars.
//!
//! `BigRational` keeps every value reduced with a positive denominator, so
//! zero is always `0/1` and equality is structural.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p"` or `"p/q"` with `q != 0`; the sign of `q` is folded into
/// the numerator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = |why: &str| Error::InvalidInput(format!("invalid rational {s:?}: {why}"));
    let s = s.trim();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad("numerator is not an integer"))?;
    let q: BigInt = q
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if q.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// Canonical wire form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(zero(), |acc, (x, y)| acc + x * y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_storage() {
        let r = frac(6, -4);
        assert_eq!(r, frac(-3, 2));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(frac(0, -7), zero());
        assert_eq!(frac(0, -7).denom(), &BigInt::from(1));
    }

    #[test]
    fn wire_format() {
        assert_eq!(format_rational(&frac(-3, 2)), "-3/2");
        assert_eq!(format_rational(&zero()), "0");
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_rational(&frac(10, 2)), "5");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert_eq!(parse_rational("3/-6").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert_eq!(
            parse_rational("123456789012345678901234567890")
                .unwrap()
                .to_string(),
            "123456789012345678901234567890"
        );
        for bad in ["", "1/0", "x", "1/2/3", "1.5", "/2"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }
}
