//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` reduced. Panics when `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"p/q"` or `"-p/q"`, reducing to lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical form: `p/q` with `q > 0`, or `p` when `q == 1`.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn as_integer(q: &Rational) -> Option<i64> {
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}

/// Membership in the positive integers 1, 2, 3, ...
pub fn as_natural(q: &Rational) -> Option<u64> {
    as_integer(q).filter(|&n| n >= 1).map(|n| n as u64)
}

pub fn is_natural(q: &Rational) -> bool {
    as_natural(q).is_some()
}

pub fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

/// Whether `q` lies in the integer range `{lo, ..., hi}` (empty when `hi < lo`).
pub fn in_int_range(q: &Rational, lo: i64, hi: i64) -> bool {
    match as_integer(q) {
        Some(n) => lo <= n && n <= hi,
        None => false,
    }
}

/// Falling factorial `l (l-1) ... (l-k+1)`, equal to 1 when `k == 0`.
pub fn falling_factorial(l: i64, k: u32) -> Rational {
    let mut acc = BigInt::one();
    for s in 0..k as i64 {
        acc *= BigInt::from(l - s);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format_rational(&parse_rational("3").unwrap()), "3");
        assert_eq!(format_rational(&parse_rational("-3/6").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational(" 4/-8 ").unwrap()), "-1/2");
        assert_eq!(format_rational(&parse_rational("0/5").unwrap()), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(3, 0), int(1));
        assert_eq!(falling_factorial(3, 2), int(6));
        assert_eq!(falling_factorial(2, 3), int(0));
        assert_eq!(falling_factorial(-2, 2), int(6));
    }

    #[test]
    fn integrality_predicates() {
        assert!(is_natural(&int(1)));
        assert!(!is_natural(&int(0)));
        assert!(!is_natural(&frac(3, 2)));
        assert!(is_nonneg_integer(&int(0)));
        assert!(in_int_range(&int(2), 0, 4));
        assert!(!in_int_range(&frac(1, 2), 0, 4));
        assert!(!in_int_range(&int(0), 0, -1));
    }

    proptest::proptest! {
        #[test]
        fn falling_factorial_recurrence(l in -20i64..20, k in 0u32..10) {
            proptest::prop_assert_eq!(
                falling_factorial(l, k + 1),
                falling_factorial(l, k) * int(l - k as i64)
            );
        }

        #[test]
        fn format_round_trips(n in -1000i64..1000, d in 1i64..1000) {
            let q = frac(n, d);
            proptest::prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    }
}
