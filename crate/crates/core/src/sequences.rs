//! The Almkvist–Zudilin family `a_i(n)`, the Apéry numbers, the auxiliary
//! sums `b_j(n)` and both sides of the single-sum reduction for `a_0(pn)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{binomial, int, pow3, sign, ExactInt, ExactRational};
use crate::padic::fermat_quotient;

/// Which sequence a [`SequenceValue`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `a_i(n)`; the index is `i`.
    #[serde(rename = "AZ_A")]
    AzA,
    /// Apéry numbers `A(n)`; no index (stored as 0).
    #[serde(rename = "APERY")]
    Apery,
    /// `b_j(n)` with the `(n - 3k)` weight; the index is `j`.
    #[serde(rename = "B")]
    B,
    /// `b_j(n)` without the `(n - 3k)` weight, the kernel of the
    /// partial-fraction split of `a_i(n)`.
    #[serde(rename = "B_KERNEL")]
    BKernel,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::AzA, Family::Apery, Family::B, Family::BKernel];

    pub fn name(self) -> &'static str {
        match self {
            Family::AzA => "AZ_A",
            Family::Apery => "APERY",
            Family::B => "B",
            Family::BKernel => "B_KERNEL",
        }
    }

    /// Whether values of this family are always integers.
    pub fn is_integral(self) -> bool {
        matches!(self, Family::AzA | Family::Apery)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown sequence family {s:?} (expected AZ_A, APERY, B or B_KERNEL)")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SequenceError {
    #[error("{family} needs n >= {min}, got {n}")]
    IndexTooSmall { family: Family, min: u64, n: u64 },
    #[error("{family} needs index >= 1, got {index}")]
    BadIndex { family: Family, index: u64 },
}

/// A computed sequence term together with the parameters that define it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceValue {
    pub family: Family,
    pub index: u64,
    pub n: u64,
    pub value: ExactRational,
}

type CacheKey = (Family, u64, u64);

/// Process-wide memo of sequence terms keyed by `(family, index, n)`.
///
/// Values are deterministic, so a racing double computation just stores the
/// same value twice.
#[derive(Debug, Default)]
pub struct SequenceCache {
    map: RwLock<HashMap<CacheKey, ExactRational>>,
}

impl SequenceCache {
    pub fn get(&self, family: Family, index: u64, n: u64) -> Option<ExactRational> {
        self.map
            .read()
            .expect("cache poisoned")
            .get(&(family, index, n))
            .cloned()
    }

    pub fn insert(&self, value: SequenceValue) {
        self.map
            .write()
            .expect("cache poisoned")
            .insert((value.family, value.index, value.n), value.value);
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().expect("cache poisoned").clear();
    }

    /// Every cached value, sorted by `(family, index, n)`.
    pub fn entries(&self) -> Vec<SequenceValue> {
        let map = self.map.read().expect("cache poisoned");
        let mut out: Vec<SequenceValue> = map
            .iter()
            .map(|(&(family, index, n), value)| SequenceValue {
                family,
                index,
                n,
                value: value.clone(),
            })
            .collect();
        out.sort_by_key(|v| (v.family, v.index, v.n));
        out
    }

    fn get_or_compute(
        &self,
        key: CacheKey,
        compute: impl FnOnce() -> ExactRational,
    ) -> ExactRational {
        if let Some(v) = self.get(key.0, key.1, key.2) {
            return v;
        }
        let value = compute();
        self.insert(SequenceValue {
            family: key.0,
            index: key.1,
            n: key.2,
            value: value.clone(),
        });
        value
    }
}

static CACHE: LazyLock<SequenceCache> = LazyLock::new(SequenceCache::default);

/// The cache shared by every sequence function in this process.
pub fn global_cache() -> &'static SequenceCache {
    &CACHE
}

fn az_term(i: i64, n: i64, k: i64) -> ExactInt {
    sign(n - k)
        * binomial(3 * k + i, k)
        * binomial(2 * k + i, k)
        * binomial(n, 3 * k + i)
        * binomial(n + k, k)
        * num_traits::pow(ExactInt::from(3), (n - 3 * k - i) as usize)
}

/// `a_i(n) = Σ_k (-1)^(n-k) C(3k+i,k) C(2k+i,k) C(n,3k+i) C(n+k,k) 3^(n-3k-i)`
/// over `0 <= k <= (n-i)/3`.
///
/// The sum is empty (zero) when `n < i`. At `n = 0` the single `k = 0` term
/// gives `a_0(0) = 1`.
pub fn az_a(i: u64, n: u64) -> ExactInt {
    let value = CACHE.get_or_compute((Family::AzA, i, n), || {
        let (i, n) = (i as i64, n as i64);
        let mut acc = ExactInt::zero();
        let mut k = 0;
        while 3 * k + i <= n {
            acc += az_term(i, n, k);
            k += 1;
        }
        int(acc)
    });
    value.to_integer()
}

/// Apéry numbers `A(n) = Σ_k C(n,k)^2 C(n+k,k)^2`.
pub fn apery(n: u64) -> ExactInt {
    CACHE
        .get_or_compute((Family::Apery, 0, n), || {
            let n = n as i64;
            let sum: ExactInt = (0..=n)
                .map(|k| {
                    let t = binomial(n, k) * binomial(n + k, k);
                    &t * &t
                })
                .sum();
            int(sum)
        })
        .to_integer()
}

/// Shared summand of `b_j(n)`: `(-1)^(n-k) C(3k,k) C(2k,k) C(n,3k) C(n+k,k) 3^(n-3k)`.
/// Terms with `3k > n` vanish through `C(n, 3k)`.
fn b_summand(n: i64, k: i64) -> ExactRational {
    let c = binomial(n, 3 * k);
    if c.is_zero() {
        return ExactRational::zero();
    }
    int(sign(n - k) * binomial(3 * k, k) * binomial(2 * k, k) * c * binomial(n + k, k))
        * pow3(n - 3 * k)
}

/// `b_j(n) = Σ_{k=0}^{n-1} (-1)^(n-k) (n-3k) C(3k,k) C(2k,k) C(n,3k) C(n+k,k) 3^(n-3k)/(k+j)`.
pub fn az_b(j: u64, n: u64) -> ExactRational {
    assert!(j >= 1, "b_j needs j >= 1");
    CACHE.get_or_compute((Family::B, j, n), || {
        let (j, n) = (j as i64, n as i64);
        (0..n)
            .map(|k| b_summand(n, k) * int(n - 3 * k) / int(k + j))
            .sum()
    })
}

/// Like [`az_b`] without the `(n - 3k)` weight:
/// `Σ_{k=0}^{n-1} (-1)^(n-k) C(3k,k) C(2k,k) C(n,3k) C(n+k,k) 3^(n-3k)/(k+j)`.
///
/// This is the sum for which
/// `a_i(n) = (-1)^i a_0(n) + i/3^i Σ_j (-1)^(j-1) C(i-1,j-1) C(n+3j,i) b_j(n)`
/// holds exactly.
pub fn az_b_kernel(j: u64, n: u64) -> ExactRational {
    assert!(j >= 1, "b_j needs j >= 1");
    CACHE.get_or_compute((Family::BKernel, j, n), || {
        let (j, n) = (j as i64, n as i64);
        (0..n).map(|k| b_summand(n, k) / int(k + j)).sum()
    })
}

/// Evaluates one term of any family, validating its parameters.
pub fn evaluate(family: Family, index: u64, n: u64) -> Result<SequenceValue, SequenceError> {
    let value = match family {
        Family::AzA => int(az_a(index, n)),
        Family::Apery => int(apery(n)),
        Family::B | Family::BKernel => {
            if index < 1 {
                return Err(SequenceError::BadIndex { family, index });
            }
            if n < 1 {
                return Err(SequenceError::IndexTooSmall { family, min: 1, n });
            }
            if family == Family::B {
                az_b(index, n)
            } else {
                az_b_kernel(index, n)
            }
        }
    };
    let index = if family == Family::Apery { 0 } else { index };
    Ok(SequenceValue {
        family,
        index,
        n,
        value,
    })
}

/// Which right-hand side of the reduction congruence to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ReductionForm {
    /// `p C(3m,m) C(2m,m) C(n,3m) C(n+m,m) q_p(3^-(n-3m))`, paired with the sum from `r = 1`.
    #[serde(rename = "Q_FORM")]
    Quotient,
    /// `C(3m,m) C(2m,m) C(n,3m) C(n+m,m) 3^(-(n-3m)(p-1))`, paired with the sum from `r = 0`.
    #[serde(rename = "POWER_FORM")]
    Power,
}

/// Summand of the reduction sum at residue `r`, without the `(-1)^r 3^(-3r)` weight.
pub(crate) fn reduction_binomials(p: i64, m: i64, n: i64, r: i64) -> ExactInt {
    let c = binomial(p * n, 3 * p * m + 3 * r);
    if c.is_zero() {
        return c;
    }
    binomial(3 * p * m + 3 * r, p * m + r)
        * binomial(2 * p * m + 2 * r, p * m + r)
        * c
        * binomial(p * (n + m) + r, p * m + r)
}

/// `Σ_r (-1)^r C(3pm+3r,pm+r) C(2pm+2r,pm+r) C(pn,3pm+3r) C(p(n+m)+r,pm+r) 3^(-3r)`
/// over `1 <= r < p`, or `0 <= r < p` when `include_r0`.
pub fn reduction_lhs(p: u64, m: u64, n: u64, include_r0: bool) -> ExactRational {
    let (p, m, n) = (p as i64, m as i64, n as i64);
    let start = if include_r0 { 0 } else { 1 };
    (start..p)
        .map(|r| int(sign(r) * reduction_binomials(p, m, n, r)) * pow3(-3 * r))
        .sum()
}

/// `C(3m,m) C(2m,m) C(n,3m) C(n+m,m)`, the common factor of both reduction right sides.
pub(crate) fn reduction_base(m: i64, n: i64) -> ExactInt {
    binomial(3 * m, m) * binomial(2 * m, m) * binomial(n, 3 * m) * binomial(n + m, m)
}

/// Right-hand side of the reduction congruence in the requested form.
pub fn reduction_rhs(p: u64, m: u64, n: u64, form: ReductionForm) -> ExactRational {
    let base = reduction_base(m as i64, n as i64);
    if base.is_zero() {
        return ExactRational::zero();
    }
    let big_n = n as i64 - 3 * m as i64;
    match form {
        ReductionForm::Quotient => {
            let q = fermat_quotient(&pow3(-big_n), p).expect("powers of 3 are units for p > 3");
            int(base) * int(p) * q
        }
        ReductionForm::Power => int(base) * pow3(-big_n * (p as i64 - 1)),
    }
}
