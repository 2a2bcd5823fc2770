//! The acceptance sweep, criterion by criterion, written out directly from
//! the criteria rather than through the crate's grid module.

#![allow(dead_code)]

use az_core::checks::{CheckCase, CheckId};
use az_core::padic::is_prime;

pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub cases: Vec<CheckCase>,
}

fn case(id: CheckId, params: &[(&str, i64)]) -> CheckCase {
    CheckCase::new(id, params.iter().copied())
}

pub fn primes_between(lo: i64, hi: i64) -> Vec<i64> {
    (lo..=hi).filter(|&p| is_prime(p as u64)).collect()
}

fn main_supercongruence() -> Vec<CheckCase> {
    let mut out = Vec::new();
    for p in [5, 7, 11, 13] {
        for n in 1..=12 {
            out.push(case(CheckId::MainSupercongruence, &[("p", p), ("n", n)]));
        }
    }
    out
}

fn vanishing() -> Vec<CheckCase> {
    let mut out = Vec::new();
    for p in [7, 11, 13] {
        for i in (1..=4).filter(|i| 3 * i < p) {
            for n in 1..=8 {
                out.push(case(CheckId::Thm31Vanish, &[("p", p), ("i", i), ("n", n)]));
            }
        }
    }
    out
}

fn reduction() -> Vec<CheckCase> {
    let mut out = Vec::new();
    for id in [CheckId::ReductionQuotient, CheckId::ReductionPower] {
        for p in [5, 7] {
            for m in 0..=3 {
                for n in 1..=8 {
                    out.push(case(id, &[("p", p), ("m", m), ("n", n)]));
                }
            }
        }
    }
    out
}

fn section_two() -> Vec<CheckCase> {
    let mut out = Vec::new();
    for n in 1..=50 {
        out.push(case(CheckId::HarmonicIdentity, &[("n", n)]));
    }
    for n in 1..=12 {
        for (num, den) in [(1, 2), (1, 3), (2, 1), (5, 1), (-1, 2)] {
            out.push(case(
                CheckId::PartialFraction,
                &[("n", n), ("y_num", num), ("y_den", den)],
            ));
        }
    }
    for p in primes_between(5, 31) {
        for k in (0..p).filter(|k| 3 * k < p) {
            out.push(case(CheckId::FloorBinomial, &[("p", p), ("k", k)]));
        }
        out.push(case(CheckId::Cor24RecipRange, &[("p", p)]));
        out.push(case(CheckId::Cor24RecipValue, &[("p", p)]));
        for i in (1..=5).filter(|i| 3 * i < p) {
            out.push(case(CheckId::Cor24ShiftRange, &[("p", p), ("i", i)]));
            out.push(case(CheckId::Cor24ShiftValue, &[("p", p), ("i", i)]));
        }
    }
    out
}

fn toolbox() -> Vec<CheckCase> {
    use CheckId::*;
    let mut out = Vec::new();
    for p in [5, 7, 11] {
        for a in 1..=5 {
            for b in 0..a {
                for j in 1..p {
                    out.push(case(Lemma51L1a, &[("p", p), ("a", a), ("b", b), ("j", j)]));
                    out.push(case(Lemma51L1b, &[("p", p), ("a", a), ("b", b), ("j", j)]));
                }
            }
        }
        for m in 0..=3 {
            for r in 0..p {
                for id in [Lemma51L3, Lemma51L4, Cor52] {
                    out.push(case(id, &[("p", p), ("m", m), ("r", r)]));
                }
                for n in 0..=5 {
                    for id in [Lemma51L2, Cor54] {
                        out.push(case(id, &[("p", p), ("m", m), ("n", n), ("r", r)]));
                    }
                    if n >= 1 && r >= 1 {
                        for id in [Lemma51L5v2, Cor55] {
                            out.push(case(id, &[("p", p), ("m", m), ("n", n), ("r", r)]));
                        }
                    }
                }
            }
        }
    }
    for p in [5, 7] {
        for k1 in 0..=3 {
            for k0 in 1..p {
                for n in 1..=3 {
                    out.push(case(
                        SaganEq26,
                        &[("p", p), ("n", n), ("k1", k1), ("k0", k0)],
                    ));
                }
                for n1 in 0..=3 {
                    for n0 in 1..p {
                        out.push(case(
                            SaganEq27,
                            &[("p", p), ("n1", n1), ("n0", n0), ("k1", k1), ("k0", k0)],
                        ));
                    }
                }
            }
        }
        for a in 2..=5 {
            for m in 0..=2 {
                for r in 0..p {
                    out.push(case(Ex53, &[("p", p), ("A", a), ("m", m), ("r", r)]));
                }
            }
        }
    }
    out
}

fn trinomial_sums() -> Vec<CheckCase> {
    let mut out = Vec::new();
    for p in primes_between(5, 31) {
        for id in [CheckId::T1, CheckId::T2, CheckId::T3] {
            out.push(case(id, &[("p", p)]));
        }
    }
    out
}

fn closecong() -> Vec<CheckCase> {
    let mut out = Vec::new();
    for p in [5, 7] {
        for n in 1..=7 {
            for m in (0..=n).filter(|m| 3 * m < n) {
                out.push(case(CheckId::CloseCong, &[("p", p), ("m", m), ("n", n)]));
            }
        }
    }
    out
}

fn section_seven() -> Vec<CheckCase> {
    use CheckId::*;
    let mut out = Vec::new();
    for p in [5, 7, 11, 13] {
        for id in [DSum1Exact, DSum1Cong, DSum2Exact, DSum2Cong, ESum] {
            out.push(case(id, &[("p", p)]));
        }
    }
    for p in [5, 7] {
        for n in 1..=5 {
            out.push(case(B1, &[("p", p), ("n", n)]));
            for m in 0..=1 {
                out.push(case(EqC, &[("p", p), ("n", n), ("m", m)]));
            }
            for i in [1, 2].into_iter().filter(|i| p > 2 * i) {
                out.push(case(Conj71First, &[("p", p), ("i", i), ("n", n)]));
                out.push(case(Conj71Second, &[("p", p), ("i", i), ("n", n)]));
            }
        }
    }
    out
}

fn remark() -> Vec<CheckCase> {
    (1..=2)
        .map(|n| case(CheckId::Higher, &[("p", 5), ("r", 2), ("n", n)]))
        .collect()
}

/// Criteria 1 to 9; criterion 10 is a set of property suites, not a sweep.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "main supercongruence mod p^3",
            cases: main_supercongruence(),
        },
        Criterion {
            number: 2,
            title: "a_i(pn) vanishes mod p^2",
            cases: vanishing(),
        },
        Criterion {
            number: 3,
            title: "reduction of a_0(pn) mod p^3",
            cases: reduction(),
        },
        Criterion {
            number: 4,
            title: "harmonic, partial-fraction and floor-binomial lemmas",
            cases: section_two(),
        },
        Criterion {
            number: 5,
            title: "binomial and multinomial toolbox",
            cases: toolbox(),
        },
        Criterion {
            number: 6,
            title: "harmonic trinomial sums T1-T3",
            cases: trinomial_sums(),
        },
        Criterion {
            number: 7,
            title: "single-sum congruence mod p^2",
            cases: closecong(),
        },
        Criterion {
            number: 8,
            title: "closed forms and a_i, b_1 conjectures",
            cases: section_seven(),
        },
        Criterion {
            number: 9,
            title: "a_0(25n) vs a_0(5n) mod 5^6",
            cases: remark(),
        },
    ]
}

pub fn all_cases() -> Vec<CheckCase> {
    criteria().into_iter().flat_map(|c| c.cases).collect()
}
