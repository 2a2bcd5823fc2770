//! Exact integer and rational arithmetic plus the combinatorial building
//! blocks every sum in this crate is made of.
//!
//! Integers are [`num_bigint::BigInt`] and rationals are
//! [`num_rational::BigRational`], which keeps every fraction in lowest terms
//! with a positive denominator. Factorials and harmonic numbers are memoized
//! in process-wide tables guarded by `RwLock`s, so every function here can be
//! called from any thread.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Normalized fraction of two [`ExactInt`]s.
pub type ExactRational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("zero raised to negative power {0}")]
    ZeroToNegativePower(i64),
}

static FACTORIALS: LazyLock<RwLock<Vec<BigInt>>> =
    LazyLock::new(|| RwLock::new(vec![BigInt::one()]));

static HARMONICS: LazyLock<RwLock<Vec<BigRational>>> =
    LazyLock::new(|| RwLock::new(vec![BigRational::zero()]));

/// Embeds an integer as a rational with denominator 1.
pub fn int(n: impl Into<BigInt>) -> ExactRational {
    BigRational::from_integer(n.into())
}

/// Builds `num/den`, normalized. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRational {
    BigRational::new(num.into(), den.into())
}

/// `n!`, memoized up to the largest argument requested so far.
pub fn factorial(n: u64) -> ExactInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().expect("factorial table poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().expect("factorial table poisoned");
    while table.len() <= n {
        let next = table.last().expect("table starts with 0!") * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// [`factorial`] for callers holding a signed argument.
pub fn factorial_checked(n: i64) -> Result<ExactInt, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeFactorial(n));
    }
    Ok(factorial(n as u64))
}

/// Generalized binomial coefficient.
///
/// Zero for `k < 0`. Otherwise the falling-factorial value
/// `a(a-1)...(a-k+1)/k!`, which is also meaningful for negative `a`
/// (`binomial(-1, j) = (-1)^j`) and vanishes for `0 <= a < k`.
pub fn binomial(a: i64, k: i64) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    if a < 0 {
        // C(a, k) = (-1)^k C(k - a - 1, k)
        let b = binomial(k - a - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > a {
        return BigInt::zero();
    }
    let (a, k) = (a as u64, k as u64);
    factorial(a) / (factorial(k) * factorial(a - k))
}

/// The trinomial coefficient `(3k)!/(k!)^3 = C(3k,k) C(2k,k)`.
pub fn trinomial(k: u64) -> ExactInt {
    multinomial_equal(3, k)
}

/// The equal-part multinomial `(Am)!/(m!)^A`.
pub fn multinomial_equal(parts: u64, m: u64) -> ExactInt {
    assert!(parts >= 1, "multinomial needs at least one part");
    let fm = factorial(m);
    factorial(parts * m) / num_traits::pow(fm, parts as usize)
}

/// `H_n = 1 + 1/2 + ... + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u64) -> ExactRational {
    let n = n as usize;
    {
        let table = HARMONICS.read().expect("harmonic table poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = HARMONICS.write().expect("harmonic table poisoned");
    while table.len() <= n {
        let j = table.len();
        let next = table.last().expect("table starts with H_0") + ratio(1, j as u64);
        table.push(next);
    }
    table[n].clone()
}

/// `x^e` for any integer exponent.
pub fn int_pow(x: &ExactRational, e: i64) -> Result<ExactRational, ExactError> {
    if x.is_zero() && e < 0 {
        return Err(ExactError::ZeroToNegativePower(e));
    }
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    Ok(acc)
}

/// `3^e` as an exact rational; the base never vanishes so this cannot fail.
pub fn pow3(e: i64) -> ExactRational {
    int_pow(&int(3), e).expect("nonzero base")
}

/// `(-1)^e` as an integer.
pub fn sign(e: i64) -> ExactInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Canonical text form `num/den` (denominator always present and positive).
pub fn format_rational(x: &ExactRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parses `num/den` or a bare integer, normalizing the result.
pub fn parse_rational(s: &str) -> Result<ExactRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| format!("invalid numerator in {s:?}"))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| format!("invalid denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// Serde adapter storing an [`ExactRational`] as its `num/den` string.
pub mod rational_string {
    use super::{format_rational, parse_rational, ExactRational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &ExactRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ExactRational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }
}

/// [`rational_string`] for optional values (`null` when absent).
pub mod opt_rational_string {
    use super::{format_rational, parse_rational, ExactRational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<ExactRational>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => s.serialize_str(&format_rational(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<ExactRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|raw| parse_rational(&raw).map_err(serde::de::Error::custom))
            .transpose()
    }
}
