//! Parameter grids for scans.
//!
//! Every check has a default sweep over its parameters. A [`GridSpec`] can
//! narrow the set of checks and replace the sweep of any single parameter;
//! combinations that violate a statement's hypotheses are dropped before they
//! are enqueued.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{CheckCase, CheckId, Params};
use crate::padic::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("malformed range {0:?} (expected a..b or a single integer)")]
    BadRange(String),
    #[error("malformed prime list {0:?} (expected 5,7,11 or 5..31)")]
    BadPrimes(String),
    #[error("malformed parameter override {0:?} (expected name=a..b)")]
    BadOverride(String),
    #[error("{0} is not a prime >= 5")]
    NotAdmissiblePrime(i64),
    #[error("no check takes parameter {0:?}")]
    UnknownParam(String),
    #[error("the parameter grid is empty")]
    Empty,
}

/// An inclusive integer range written `a..b` (or a single `a`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn iter(self) -> RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn contains(self, v: i64) -> bool {
        self.iter().contains(&v)
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for IntRange {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GridError::BadRange(s.to_string());
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                Ok(IntRange::new(parse(a)?, parse(b)?))
            }
            None => {
                let v = parse(s)?;
                Ok(IntRange::new(v, v))
            }
        }
    }
}

/// Parses `5,7,11` or `5..31`; a range keeps only its primes.
pub fn parse_primes(s: &str) -> Result<Vec<i64>, GridError> {
    let out: Vec<i64> = if s.contains("..") {
        let r: IntRange = s.parse().map_err(|_| GridError::BadPrimes(s.to_string()))?;
        r.iter().filter(|&p| p >= 5 && is_prime(p as u64)).collect()
    } else {
        let mut v = Vec::new();
        for t in s.split(',').filter(|t| !t.trim().is_empty()) {
            let p: i64 = t
                .trim()
                .parse()
                .map_err(|_| GridError::BadPrimes(s.to_string()))?;
            if p < 5 || !is_prime(p as u64) {
                return Err(GridError::NotAdmissiblePrime(p));
            }
            v.push(p);
        }
        v
    };
    Ok(out)
}

/// Parses `name=a..b`.
pub fn parse_override(s: &str) -> Result<(String, IntRange), GridError> {
    let (name, range) = s
        .split_once('=')
        .ok_or_else(|| GridError::BadOverride(s.to_string()))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(GridError::BadOverride(s.to_string()));
    }
    Ok((name.to_string(), range.parse()?))
}

/// Which checks to scan and which parameter sweeps to replace.
///
/// `None` everywhere means the full default sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub checks: Option<Vec<CheckId>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub primes: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub ranges: BTreeMap<String, IntRange>,
}

impl GridSpec {
    pub fn checks(mut self, ids: impl IntoIterator<Item = CheckId>) -> Self {
        self.checks = Some(ids.into_iter().collect());
        self
    }

    pub fn primes(mut self, primes: impl IntoIterator<Item = i64>) -> Self {
        self.primes = Some(primes.into_iter().collect());
        self
    }

    pub fn range(mut self, name: &str, range: IntRange) -> Self {
        self.ranges.insert(name.to_string(), range);
        self
    }

    /// Every valid case of the grid, grouped by check in [`CheckId::ALL`] order.
    pub fn cases(&self) -> Result<Vec<CheckCase>, GridError> {
        if self.ranges.values().any(|r| r.lo > r.hi)
            || self.primes.as_ref().is_some_and(Vec::is_empty)
        {
            return Err(GridError::Empty);
        }
        for name in self.ranges.keys() {
            if !CheckId::ALL
                .iter()
                .any(|id| id.param_names().contains(&name.as_str()))
            {
                return Err(GridError::UnknownParam(name.clone()));
            }
        }
        if let Some(primes) = &self.primes {
            if let Some(&bad) = primes.iter().find(|&&p| p < 5 || !is_prime(p as u64)) {
                return Err(GridError::NotAdmissiblePrime(bad));
            }
        }
        let ids: Vec<CheckId> = match &self.checks {
            Some(ids) => CheckId::ALL
                .iter()
                .copied()
                .filter(|id| ids.contains(id))
                .collect(),
            None => CheckId::ALL.to_vec(),
        };
        let mut out = Vec::new();
        for id in ids {
            expand(id, &axes(id), 0, &mut Params::new(), self, &mut out);
        }
        if out.is_empty() {
            return Err(GridError::Empty);
        }
        Ok(out)
    }
}

/// Values one or more parameters take, given those already fixed.
type Values = fn(&Params) -> Vec<Vec<i64>>;

struct Axis {
    names: &'static [&'static str],
    values: Values,
}

fn expand(
    id: CheckId,
    axes: &[Axis],
    depth: usize,
    fixed: &mut Params,
    spec: &GridSpec,
    out: &mut Vec<CheckCase>,
) {
    let Some(axis) = axes.get(depth) else {
        let case = CheckCase {
            check_id: id,
            params: fixed.clone(),
        };
        if case.validate().is_ok() {
            out.push(case);
        }
        return;
    };
    let tuples = match axis.names {
        ["p"] if spec.primes.is_some() => spec.primes.iter().flatten().map(|&p| vec![p]).collect(),
        [name] if spec.ranges.contains_key(*name) => {
            spec.ranges[*name].iter().map(|v| vec![v]).collect()
        }
        names => (axis.values)(fixed)
            .into_iter()
            .filter(|t| {
                names
                    .iter()
                    .zip(t)
                    .all(|(n, v)| spec.ranges.get(*n).is_none_or(|r| r.contains(*v)))
            })
            .collect::<Vec<_>>(),
    };
    for tuple in tuples {
        for (name, v) in axis.names.iter().zip(&tuple) {
            fixed.insert(name.to_string(), *v);
        }
        expand(id, axes, depth + 1, fixed, spec, out);
    }
    for name in axis.names {
        fixed.remove(*name);
    }
}

fn each(values: impl IntoIterator<Item = i64>) -> Vec<Vec<i64>> {
    values.into_iter().map(|v| vec![v]).collect()
}

fn primes_to_31(_: &Params) -> Vec<Vec<i64>> {
    each([5, 7, 11, 13, 17, 19, 23, 29, 31])
}

fn below_p(f: &Params) -> Vec<Vec<i64>> {
    each(0..f["p"])
}

fn positive_below_p(f: &Params) -> Vec<Vec<i64>> {
    each(1..f["p"])
}

macro_rules! axis {
    ($($name:literal),+ => $values:expr) => {
        Axis { names: &[$($name),+], values: $values }
    };
}

/// The default sweep of each check: the desk-scale acceptance grid.
fn axes(id: CheckId) -> Vec<Axis> {
    use CheckId::*;
    match id {
        MainSupercongruence => vec![
            axis!("p" => |_| each([5, 7, 11, 13])),
            axis!("n" => |_| each(1..=12)),
        ],
        Higher => vec![
            axis!("p" => |_| each([5])),
            axis!("r" => |_| each([2])),
            axis!("n" => |_| each([1, 2])),
        ],
        Thm31Vanish => vec![
            axis!("p" => |_| each([7, 11, 13])),
            axis!("i" => |_| each(1..=4)),
            axis!("n" => |_| each(1..=8)),
        ],
        Lucas => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("b" => |_| each(0..=2)),
            axis!("c" => below_p),
            axis!("d" => |_| each(0..=2)),
            axis!("e" => below_p),
        ],
        LucasCube => vec![
            axis!("p" => |_| each([5, 7, 11])),
            axis!("b" => |_| each(0..=4)),
            axis!("d" => |_| each(0..=4)),
        ],
        Gessel => vec![axis!("p" => primes_to_31), axis!("j" => positive_below_p)],
        HarmonicIdentity => vec![axis!("n" => |_| each(1..=50))],
        PartialFraction => vec![
            axis!("n" => |_| each(1..=12)),
            axis!("y_num", "y_den" => |_| vec![vec![1, 2], vec![1, 3], vec![2, 1], vec![5, 1], vec![-1, 2]]),
        ],
        FloorBinomial => vec![axis!("p" => primes_to_31), axis!("k" => below_p)],
        Cor24RecipRange | Cor24RecipValue => vec![axis!("p" => primes_to_31)],
        Cor24ShiftRange | Cor24ShiftValue => {
            vec![axis!("p" => primes_to_31), axis!("i" => |_| each(1..=5))]
        }
        ReductionQuotient | ReductionPower => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("m" => |_| each(0..=3)),
            axis!("n" => |_| each(1..=8)),
        ],
        Lemma51L1a | Lemma51L1b => vec![
            axis!("p" => |_| each([5, 7, 11])),
            axis!("a" => |_| each(1..=5)),
            axis!("b" => |f| each(0..f["a"])),
            axis!("j" => positive_below_p),
        ],
        Lemma51L2 | Cor54 => vec![
            axis!("p" => |_| each([5, 7, 11])),
            axis!("m" => |_| each(0..=3)),
            axis!("n" => |_| each(0..=5)),
            axis!("r" => below_p),
        ],
        Lemma51L3 | Lemma51L4 | Cor52 => vec![
            axis!("p" => |_| each([5, 7, 11])),
            axis!("m" => |_| each(0..=3)),
            axis!("r" => below_p),
        ],
        Lemma51L5v2 | Cor55 => vec![
            axis!("p" => |_| each([5, 7, 11])),
            axis!("m" => |_| each(0..=3)),
            axis!("n" => |_| each(1..=5)),
            axis!("r" => positive_below_p),
        ],
        SaganEq26 => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("n" => |_| each(1..=4)),
            axis!("k1" => |_| each(0..=3)),
            axis!("k0" => positive_below_p),
        ],
        SaganEq27 => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("n1" => |_| each(0..=3)),
            axis!("n0" => positive_below_p),
            axis!("k1" => |_| each(0..=3)),
            axis!("k0" => positive_below_p),
        ],
        Ex53 => vec![
            axis!("A" => |_| each(2..=5)),
            axis!("p" => |_| each([5, 7])),
            axis!("m" => |_| each(0..=2)),
            axis!("r" => below_p),
        ],
        T1 | T2 | T3 => vec![axis!("p" => primes_to_31)],
        CloseCong => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("m" => |_| each(0..=2)),
            axis!("n" => |_| each(1..=7)),
        ],
        Conj71First | Conj71Second => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("i" => |_| each([1, 2])),
            axis!("n" => |_| each(1..=5)),
        ],
        B1 => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("n" => |_| each(1..=5)),
        ],
        EqC => vec![
            axis!("p" => |_| each([5, 7])),
            axis!("n" => |_| each(1..=5)),
            axis!("m" => |_| each(0..=1)),
        ],
        DSum1Exact | DSum1Cong | DSum2Exact | DSum2Cong | ESum => {
            vec![axis!("p" => |_| each([5, 7, 11, 13]))]
        }
    }
}
