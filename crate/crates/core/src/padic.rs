//! p-adic valuations and the congruence predicate used by every check.
//!
//! Two rationals are congruent modulo `p^k` when `vp(x - y) >= k`. This is
//! the only congruence notion in the crate; no computation ever reduces
//! modulo a fixed integer before comparing, because many of the sums that
//! get compared have terms with negative valuation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{int, int_pow, ExactInt, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadicError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precision must be at least 1")]
    ZeroPrecision,
    #[error("{value} is not a {p}-adic unit")]
    NotUnit { value: String, p: u64 },
    #[error("{value} is not {p}-integral")]
    NotIntegral { value: String, p: u64 },
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A p-adic valuation: a (possibly negative) integer, or infinity for zero.
///
/// `Infinite` orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

/// Sum of valuations, as for a product of the underlying numbers.
impl std::ops::Add for Valuation {
    type Output = Valuation;

    fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl PartialEq<i64> for Valuation {
    fn eq(&self, other: &i64) -> bool {
        *self == Valuation::Finite(*other)
    }
}

impl PartialOrd<i64> for Valuation {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Valuation::Finite(*other)))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => f.pad(&v.to_string()),
            Valuation::Infinite => f.pad("inf"),
        }
    }
}

impl std::str::FromStr for Valuation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" => Ok(Valuation::Infinite),
            _ => s
                .parse()
                .map(Valuation::Finite)
                .map_err(|_| format!("invalid valuation {s:?}")),
        }
    }
}

// Serialized as a JSON integer, or the string "inf".
impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Valuation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(v) => Ok(Valuation::Finite(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// A prime together with a target precision `k`, i.e. the modulus `p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicContext {
    p: u64,
    k: u32,
}

impl PadicContext {
    pub fn new(p: u64, k: u32) -> Result<Self, PadicError> {
        if !is_prime(p) {
            return Err(PadicError::NotPrime(p));
        }
        if k == 0 {
            return Err(PadicError::ZeroPrecision);
        }
        Ok(PadicContext { p, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> ExactInt {
        num_traits::pow(BigInt::from(self.p), self.k as usize)
    }
}

fn vp_int(n: &BigInt, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `vp(num) - vp(den)`, or [`Valuation::Infinite`] for zero.
pub fn vp(x: &ExactRational, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    Valuation::Finite(vp_int(x.numer(), p) - vp_int(x.denom(), p))
}

/// `x ≡ y (mod p^k)`, decided as `vp(x - y) >= k`.
pub fn congruent(x: &ExactRational, y: &ExactRational, ctx: &PadicContext) -> bool {
    vp(&(x - y), ctx.p) >= ctx.k as i64
}

/// The Fermat quotient `(x^(p-1) - 1)/p` of a p-adic unit `x`.
pub fn fermat_quotient(x: &ExactRational, p: u64) -> Result<ExactRational, PadicError> {
    if vp(x, p) != 0 {
        return Err(PadicError::NotUnit {
            value: x.to_string(),
            p,
        });
    }
    let power = int_pow(x, p as i64 - 1).expect("unit is nonzero");
    Ok((power - int(1)) / int(p))
}

/// The representative of `x` in `[0, p^k)`.
pub fn reduce_residue(x: &ExactRational, ctx: &PadicContext) -> Result<ExactInt, PadicError> {
    if vp(x, ctx.p) < 0 {
        return Err(PadicError::NotIntegral {
            value: x.to_string(),
            p: ctx.p,
        });
    }
    let modulus = ctx.modulus();
    let den = x.denom().mod_floor(&modulus);
    let inv = if den.is_one() {
        BigInt::one()
    } else {
        let eg = den.extended_gcd(&modulus);
        debug_assert!(eg.gcd.is_one());
        eg.x
    };
    Ok((x.numer() * inv).mod_floor(&modulus))
}
