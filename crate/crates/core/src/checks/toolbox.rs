//! Binomial congruences modulo `p^2` and `p^3` for arguments written in base
//! `p`, used to peel the `p`-power parts off every factor of the reduction
//! sum.

use super::{Args, CheckCase, CheckError, CheckId, CheckOutcome, Evaluation};
use crate::exact::{
    binomial, harmonic, int, multinomial_equal, ratio, sign, trinomial, ExactRational,
};

pub(super) fn evaluate(a: &Args<'_>) -> Evaluation {
    use CheckId::*;
    let p = a.get("p");
    match a.id() {
        Lemma51L1a => {
            let (ap, bp, j) = (a.get("a"), a.get("b"), a.get("j"));
            let lhs = binomial(ap * p, bp * p + j);
            let rhs = (ap - bp) * binomial(ap, bp) * binomial(p, j);
            Evaluation::congruence(int(lhs), int(rhs), p, 2)
        }
        Lemma51L1b => {
            let (ap, bp, j) = (a.get("a"), a.get("b"), a.get("j"));
            let lhs = binomial(ap * p, bp * p - j);
            let rhs = bp * binomial(ap, bp) * binomial(p, j);
            Evaluation::congruence(int(lhs), int(rhs), p, 2)
        }
        Lemma51L2 => {
            let (m, n, r) = (a.get("m"), a.get("n"), a.get("r"));
            let lhs = binomial(p * (n + m) + r, p * m + r);
            let rhs = binomial(n + m, m) * (1 + n * (binomial(p + r, r) - 1));
            Evaluation::congruence(int(lhs), int(rhs), p, 2)
        }
        Lemma51L3 => {
            let (m, r) = (a.get("m"), a.get("r"));
            let lhs = binomial(2 * p * m + 2 * r, p * m + r);
            let c2r = binomial(2 * r, r);
            let rhs = binomial(2 * m, m) * (&c2r + 2 * m * binomial(p + 2 * r, r) - 2 * m * &c2r);
            Evaluation::congruence(int(lhs), int(rhs), p, 2)
        }
        Lemma51L4 => {
            let (m, r) = (a.get("m"), a.get("r"));
            let lhs = binomial(3 * p * m + 3 * r, p * m + r);
            let c3r = binomial(3 * r, r);
            let c3rp = binomial(3 * r, p + r);
            let first = binomial(3 * m, m)
                * (2 * m * binomial(p + 3 * r, r) + m * binomial(p + 3 * r, 2 * r)
                    - (3 * m - 1) * &c3r);
            let second = binomial(3 * m, m - 1)
                * (&c3rp + (m - 1) * binomial(p + 3 * r, 2 * p + r) - 3 * m * &c3rp);
            Evaluation::congruence(int(lhs), int(first + second), p, 2)
        }
        Lemma51L5v2 => {
            let (m, n, r) = (a.get("m"), a.get("n"), a.get("r"));
            let eps = 3 * r / p;
            let lhs = binomial(p * n, 3 * p * m + 3 * r);
            let bracket = n * binomial(p - 1, 3 * r - 1 - eps * p) + sign(r - eps) * (n - 1);
            let rhs = ratio(p * n, 3 * p * m + 3 * r) * int(binomial(n - 1, 3 * m + eps) * bracket);
            Evaluation::congruence(int(lhs), rhs, p, 3).with_note(format!("epsilon={eps}"))
        }
        SaganEq26 => {
            let (n, k1, k0) = (a.get("n"), a.get("k1"), a.get("k0"));
            let lhs = binomial(n * p, k1 * p + k0);
            let rhs = n * binomial(n - 1, k1) * binomial(p, k0);
            Evaluation::congruence(int(lhs), int(rhs), p, 2)
        }
        SaganEq27 => {
            let (n1, n0, k1, k0) = (a.get("n1"), a.get("n0"), a.get("k1"), a.get("k0"));
            let lhs = binomial(n1 * p + n0, k1 * p + k0);
            let rhs = sagan_eq27_rhs(p, n1, n0, k1, k0);
            Evaluation::congruence(int(lhs), int(rhs), p, 2)
        }
        Cor52 => {
            let (m, r) = (a.get("m"), a.get("r"));
            let lhs =
                binomial(3 * p * m + 3 * r, p * m + r) * binomial(2 * p * m + 2 * r, p * m + r);
            let rhs =
                int(trinomial(m as u64) * trinomial(r as u64)) * multinomial_correction(p, 3, m, r);
            Evaluation::congruence(int(lhs), rhs, p, 2)
        }
        Ex53 => {
            let (parts, m, r) = (a.get("A"), a.get("m"), a.get("r"));
            let lhs = multinomial_equal(parts as u64, (p * m + r) as u64);
            let rhs = int(multinomial_equal(parts as u64, m as u64)
                * multinomial_equal(parts as u64, r as u64))
                * multinomial_correction(p, parts, m, r);
            Evaluation::congruence(int(lhs), rhs, p, 2)
        }
        Cor54 => {
            let (m, n, r) = (a.get("m"), a.get("n"), a.get("r"));
            let lhs = binomial(p * (n + m) + r, p * m + r);
            let rhs = int(binomial(n + m, m)) * (int(1) + int(p * n) * harmonic(r as u64));
            Evaluation::congruence(int(lhs), rhs, p, 2)
        }
        Cor55 => {
            let (m, n, r) = (a.get("m"), a.get("n"), a.get("r"));
            let lhs = binomial(p * n, 3 * p * m + 3 * r);
            let (branch, rhs) = cor55_rhs(p, m, n, r);
            Evaluation::congruence(int(lhs), rhs, p, 3).with_note(format!("branch={branch}"))
        }
        other => unreachable!("{other} is not a toolbox check"),
    }
}

/// `C(n1,k1)[(1+n1) C(n0,k0) - (n1+k1) C(n0-p,k0) - k1 C(n0-p,k0+p)]`.
pub(crate) fn sagan_eq27_rhs(p: i64, n1: i64, n0: i64, k1: i64, k0: i64) -> num_bigint::BigInt {
    binomial(n1, k1)
        * ((1 + n1) * binomial(n0, k0)
            - (n1 + k1) * binomial(n0 - p, k0)
            - k1 * binomial(n0 - p, k0 + p))
}

/// `1 + Apm(H_{Ar} - H_r)`.
fn multinomial_correction(p: i64, parts: i64, m: i64, r: i64) -> ExactRational {
    int(1) + int(parts * p * m) * (harmonic((parts * r) as u64) - harmonic(r as u64))
}

/// The branch index (1, 2 or 3, by where `r` falls against `p/3` and
/// `2p/3`) and the corresponding right side for `C(pn, 3pm+3r)` mod `p^3`.
pub(crate) fn cor55_rhs(p: i64, m: i64, n: i64, r: i64) -> (u8, ExactRational) {
    let big_n = n - 3 * m;
    let prefactor =
        (ratio(p, 3 * r) - ratio(p * p * m, 3 * r * r)) * int(sign(r) * binomial(n, 3 * m));
    let pn = int(p * n);
    let (branch, factor) = if 3 * r < p {
        (
            1,
            int(big_n) * (int(-1) + &pn * harmonic((3 * r - 1) as u64)),
        )
    } else if 3 * r < 2 * p {
        let h = harmonic((3 * r - 1 - p) as u64);
        (
            2,
            int(binomial(big_n, 2) * 2) * (int(1) - &pn * h) / int(3 * m + 1),
        )
    } else {
        let h = harmonic((3 * r - 1 - 2 * p) as u64);
        (
            3,
            int(binomial(big_n, 3) * 6) * (int(-1) + &pn * h) / int((3 * m + 1) * (3 * m + 2)),
        )
    };
    (branch, prefactor * factor)
}

/// Parameters of one part of the base-`p` binomial lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma51 {
    L1a { p: i64, a: i64, b: i64, j: i64 },
    L1b { p: i64, a: i64, b: i64, j: i64 },
    L2 { p: i64, m: i64, n: i64, r: i64 },
    L3 { p: i64, m: i64, r: i64 },
    L4 { p: i64, m: i64, r: i64 },
    L5v2 { p: i64, m: i64, n: i64, r: i64 },
}

impl Lemma51 {
    pub fn case(self) -> CheckCase {
        match self {
            Lemma51::L1a { p, a, b, j } => CheckCase::new(
                CheckId::Lemma51L1a,
                [("p", p), ("a", a), ("b", b), ("j", j)],
            ),
            Lemma51::L1b { p, a, b, j } => CheckCase::new(
                CheckId::Lemma51L1b,
                [("p", p), ("a", a), ("b", b), ("j", j)],
            ),
            Lemma51::L2 { p, m, n, r } => {
                CheckCase::new(CheckId::Lemma51L2, [("p", p), ("m", m), ("n", n), ("r", r)])
            }
            Lemma51::L3 { p, m, r } => {
                CheckCase::new(CheckId::Lemma51L3, [("p", p), ("m", m), ("r", r)])
            }
            Lemma51::L4 { p, m, r } => {
                CheckCase::new(CheckId::Lemma51L4, [("p", p), ("m", m), ("r", r)])
            }
            Lemma51::L5v2 { p, m, n, r } => CheckCase::new(
                CheckId::Lemma51L5v2,
                [("p", p), ("m", m), ("n", n), ("r", r)],
            ),
        }
    }
}

/// Evaluates one part of the base-`p` binomial lemma.
pub fn check_lemma51(part: Lemma51) -> Result<CheckOutcome, CheckError> {
    super::evaluate(&part.case())
}

/// Digit decompositions for the two base-`p` binomial congruences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sagan {
    /// `C(np, k1 p + k0)` with `0 < k0 < p`.
    Eq26 { p: i64, n: i64, k1: i64, k0: i64 },
    /// `C(n1 p + n0, k1 p + k0)` with `0 < n0, k0 < p`.
    Eq27 {
        p: i64,
        n1: i64,
        n0: i64,
        k1: i64,
        k0: i64,
    },
}

impl Sagan {
    pub fn case(self) -> CheckCase {
        match self {
            Sagan::Eq26 { p, n, k1, k0 } => CheckCase::new(
                CheckId::SaganEq26,
                [("p", p), ("n", n), ("k1", k1), ("k0", k0)],
            ),
            Sagan::Eq27 { p, n1, n0, k1, k0 } => CheckCase::new(
                CheckId::SaganEq27,
                [("p", p), ("n1", n1), ("n0", n0), ("k1", k1), ("k0", k0)],
            ),
        }
    }
}

pub fn check_sagan(part: Sagan) -> Result<CheckOutcome, CheckError> {
    super::evaluate(&part.case())
}

/// The trinomial congruence for `A = 3` and its equal-multinomial
/// generalization for any other `A`.
pub fn check_cor52(p: i64, m: i64, r: i64, parts: i64) -> Result<CheckOutcome, CheckError> {
    let case = if parts == 3 {
        CheckCase::new(CheckId::Cor52, [("p", p), ("m", m), ("r", r)])
    } else {
        CheckCase::new(CheckId::Ex53, [("p", p), ("A", parts), ("m", m), ("r", r)])
    };
    super::evaluate(&case)
}

/// `C(p(n+m)+r, pm+r) ≡ C(n+m,m)(1 + pn H_r) (mod p^2)`.
pub fn check_cor54(p: i64, m: i64, n: i64, r: i64) -> Result<CheckOutcome, CheckError> {
    super::evaluate(&CheckCase::new(
        CheckId::Cor54,
        [("p", p), ("m", m), ("n", n), ("r", r)],
    ))
}

/// The three-branch congruence for `C(pn, 3pm+3r)` modulo `p^3`; the branch is in the note.
pub fn check_cor55(p: i64, m: i64, n: i64, r: i64) -> Result<CheckOutcome, CheckError> {
    super::evaluate(&CheckCase::new(
        CheckId::Cor55,
        [("p", p), ("m", m), ("n", n), ("r", r)],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::{congruent, PadicContext, Valuation};

    #[test]
    fn lemma51_examples() {
        let l1 = check_lemma51(Lemma51::L1a {
            p: 5,
            a: 3,
            b: 1,
            j: 2,
        })
        .unwrap();
        assert_eq!(l1.lhs, Some(int(6435)));
        assert_eq!(l1.rhs, Some(int(60)));
        // 6375 = 3 · 5^3 · 17
        assert_eq!(l1.achieved_valuation, Some(Valuation::Finite(3)));
        assert!(
            check_lemma51(Lemma51::L2 {
                p: 5,
                m: 1,
                n: 2,
                r: 3
            })
            .unwrap()
            .passed
        );
        assert!(
            check_lemma51(Lemma51::L5v2 {
                p: 5,
                m: 0,
                n: 2,
                r: 2
            })
            .unwrap()
            .passed
        );
        assert!(
            check_lemma51(Lemma51::L4 { p: 7, m: 1, r: 5 })
                .unwrap()
                .passed
        );
        assert!(check_lemma51(Lemma51::L1b {
            p: 7,
            a: 2,
            b: 2,
            j: 1
        })
        .is_err());
        assert!(check_lemma51(Lemma51::L5v2 {
            p: 7,
            m: 0,
            n: 2,
            r: 0
        })
        .is_err());
        assert!(check_lemma51(Lemma51::L3 { p: 7, m: 0, r: 7 }).is_err());
    }

    #[test]
    fn epsilon_is_floor_of_3r_over_p() {
        let eps = |r| {
            let o = check_lemma51(Lemma51::L5v2 {
                p: 7,
                m: 0,
                n: 3,
                r,
            })
            .unwrap();
            o.note
        };
        assert_eq!(eps(2), "epsilon=0");
        assert_eq!(eps(3), "epsilon=1");
        assert_eq!(eps(5), "epsilon=2");
    }

    #[test]
    fn sagan_examples() {
        let e26 = check_sagan(Sagan::Eq26 {
            p: 5,
            n: 2,
            k1: 0,
            k0: 3,
        })
        .unwrap();
        assert_eq!(e26.lhs, Some(int(120)));
        assert_eq!(e26.rhs, Some(int(20)));
        assert_eq!(e26.achieved_valuation, Some(Valuation::Finite(2)));
        assert!(
            check_sagan(Sagan::Eq27 {
                p: 5,
                n1: 1,
                n0: 2,
                k1: 0,
                k0: 2
            })
            .unwrap()
            .passed
        );
        assert!(
            check_sagan(Sagan::Eq27 {
                p: 7,
                n1: 2,
                n0: 3,
                k1: 1,
                k0: 1
            })
            .unwrap()
            .passed
        );
        assert!(check_sagan(Sagan::Eq27 {
            p: 7,
            n1: 2,
            n0: 0,
            k1: 1,
            k0: 1
        })
        .is_err());
        assert!(check_sagan(Sagan::Eq26 {
            p: 7,
            n: 2,
            k1: 1,
            k0: 7
        })
        .is_err());
    }

    #[test]
    fn lemma_l2_agrees_with_sagan_route() {
        // C(p(n+m)+r, pm+r) via the generalized two-digit form with n1 = n+m, n0 = r, k1 = m, k0 = r
        for p in [5i64, 7, 11] {
            let ctx = PadicContext::new(p as u64, 2).unwrap();
            for m in 0..=3 {
                for n in 1..=5 {
                    for r in 1..p {
                        let direct = int(binomial(n + m, m) * (1 + n * (binomial(p + r, r) - 1)));
                        let sagan = int(sagan_eq27_rhs(p, n + m, r, m, r));
                        assert!(congruent(&direct, &sagan, &ctx), "p={p} m={m} n={n} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn cor52_examples() {
        let trivial = check_cor52(5, 0, 2, 3).unwrap();
        assert_eq!(trivial.lhs, Some(int(trinomial(2))));
        assert_eq!(trivial.achieved_valuation, Some(Valuation::Infinite));
        assert!(check_cor52(5, 1, 2, 3).unwrap().passed);
        let ex = check_cor52(7, 1, 3, 4).unwrap();
        assert_eq!(ex.check_id, CheckId::Ex53);
        assert!(ex.passed);
    }

    #[test]
    fn exercise_at_three_parts_matches_trinomial_form() {
        for p in [5i64, 7] {
            for m in 0..=2 {
                for r in 0..p {
                    let cor = check_cor52(p, m, r, 3).unwrap();
                    let ex = super::super::evaluate(&CheckCase::new(
                        CheckId::Ex53,
                        [("p", p), ("A", 3), ("m", m), ("r", r)],
                    ))
                    .unwrap();
                    assert_eq!((cor.lhs, cor.rhs), (ex.lhs, ex.rhs));
                }
            }
        }
    }

    #[test]
    fn cor54_examples() {
        let trivial = check_cor54(5, 0, 1, 0).unwrap();
        assert_eq!((trivial.lhs, trivial.rhs), (Some(int(1)), Some(int(1))));
        assert!(check_cor54(5, 1, 2, 3).unwrap().passed);
        assert!(check_cor54(11, 2, 3, 7).unwrap().passed);
    }

    #[test]
    fn cor55_examples() {
        let b1 = check_cor55(5, 0, 2, 1).unwrap();
        assert!(b1.passed);
        assert_eq!(b1.note, "branch=1");
        let b2 = check_cor55(5, 0, 4, 3).unwrap();
        assert!(b2.passed);
        assert_eq!(b2.note, "branch=2");
        let b3 = check_cor55(7, 0, 7, 6).unwrap();
        assert!(b3.passed);
        assert_eq!(b3.note, "branch=3");
    }
}
