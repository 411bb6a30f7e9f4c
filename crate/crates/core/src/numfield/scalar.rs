use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n (n-1) ... (n-k+1)`; zero when `k > n`.
pub fn falling_factorial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    ((n - k + 1)..=n).fold(BigInt::one(), |acc, j| acc * j)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    falling_factorial(n, k) / factorial(k)
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let bad = || Error::Usage(format!("invalid rational literal `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Usage("division by zero in rational literal".into()));
    }
    Ok(Scalar::new(num, den))
}

/// `3`, `-1/2`: the grammar's own literal syntax.
pub fn format_scalar(q: &Scalar) -> String {
    q.to_string()
}

/// Joins signed term strings (`"-3*x"`, `"y"`) into `"y - 3*x"`.
pub(crate) fn join_signed(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for part in parts {
        if out.is_empty() {
            out = part;
        } else if let Some(rest) = part.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&part);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// `c*mono` with unit coefficients elided.
pub(crate) fn scalar_term(c: &Scalar, mono: &str) -> String {
    if mono.is_empty() {
        c.to_string()
    } else if c.is_one() {
        mono.to_string()
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{c}*{mono}")
    }
}

/// `name^e` factors joined with `*`, skipping zero exponents.
pub(crate) fn power_product<'a>(factors: impl IntoIterator<Item = (&'a str, i64)>) -> String {
    factors
        .into_iter()
        .filter(|(_, e)| *e != 0)
        .map(|(n, e)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let q = Scalar::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(q, Scalar::new(BigInt::from(-2), BigInt::from(3)));
        assert_eq!(q.denom(), &BigInt::from(3));
    }

    #[test]
    fn parse_literals() {
        assert_eq!(parse_scalar("3/2").unwrap(), Scalar::new(3.into(), 2.into()));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(2, 3), BigInt::zero());
        assert_eq!(binomial(6, 3), BigInt::from(20));
    }
}
