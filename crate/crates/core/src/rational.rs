//! Exact rational scalars and the integer combinatorics used by the closed forms.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `num/den` rendering; integers keep the `/1` suffix.
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `a`, `-a`, or `a/b`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `binom(n, k)` for integer `n` (possibly negative) and non-negative `k`;
/// zero for negative `k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    acc / factorial(k as u64)
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

pub fn big(q: &BigInt) -> Rational {
    Rational::from_integer(q.clone())
}

/// Exact `q`-th root of a non-negative rational, if one exists.
pub fn exact_root(value: &Rational, q: u32) -> Option<Rational> {
    if q == 0 {
        return None;
    }
    if value.is_negative() {
        if q % 2 == 0 {
            return None;
        }
        return exact_root(&-value.clone(), q).map(|r| -r);
    }
    let n = value.numer().magnitude().nth_root(q);
    let d = value.denom().magnitude().nth_root(q);
    let candidate = Rational::new(BigInt::from(n), BigInt::from(d));
    let mut check = Rational::one();
    for _ in 0..q {
        check *= &candidate;
    }
    (check == *value).then_some(candidate)
}

/// Integer power with a possibly negative exponent.
pub fn pow_i64(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `Some(n)` when the rational is an integer that fits in `i64`.
pub fn as_i64(q: &Rational) -> Option<i64> {
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}

pub fn is_even(n: i64) -> bool {
    n.is_even()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_and_catalan() {
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        let c: Vec<_> = (0..6).map(catalan).collect();
        assert_eq!(c, [1, 1, 2, 5, 14, 42].map(BigInt::from));
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(to_fraction_string(&ratio(6, -4)), "-3/2");
        assert_eq!(to_fraction_string(&int(5)), "5/1");
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&ratio(4, 9), 2), Some(ratio(2, 3)));
        assert_eq!(exact_root(&int(2), 2), None);
        assert_eq!(exact_root(&int(-8), 3), Some(int(-2)));
    }
}
