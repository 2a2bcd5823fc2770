//! The main supercongruence, its higher-power strengthening, the vanishing
//! of `a_i(pn)`, the classical binomial congruences and the preliminary
//! identities and congruences the main proof rests on.

use num_traits::Zero;

use super::{Args, CheckCase, CheckError, CheckId, CheckOutcome, Evaluation};
use crate::exact::{binomial, harmonic, int, pow3, ratio, sign, trinomial, ExactRational};
use crate::padic::fermat_quotient;
use crate::sequences::{az_a, reduction_lhs, reduction_rhs, ReductionForm};

/// `C(3k; k,k,k) 3^(-3k)`.
pub(crate) fn trinomial_weight(k: i64) -> ExactRational {
    int(trinomial(k as u64)) * pow3(-3 * k)
}

/// `q_p(x)` for an `x` known to be a unit.
pub(crate) fn quotient(x: &ExactRational, p: i64) -> ExactRational {
    fermat_quotient(x, p as u64).expect("argument is a p-adic unit")
}

pub(super) fn evaluate(a: &Args<'_>) -> Evaluation {
    use CheckId::*;
    match a.id() {
        MainSupercongruence => {
            let (p, n) = (a.get("p"), a.get("n"));
            Evaluation::congruence(int(az_a(0, (p * n) as u64)), int(az_a(0, n as u64)), p, 3)
        }
        Higher => {
            let (p, r, n) = (a.get("p"), a.get("r"), a.get("n"));
            let lower = p.pow(r as u32 - 1) * n;
            Evaluation::congruence(
                int(az_a(0, (lower * p) as u64)),
                int(az_a(0, lower as u64)),
                p,
                3 * r,
            )
        }
        Thm31Vanish => {
            let (p, i, n) = (a.get("p"), a.get("i"), a.get("n"));
            Evaluation::congruence(
                int(az_a(i as u64, (p * n) as u64)),
                ExactRational::zero(),
                p,
                2,
            )
        }
        Lucas => {
            let (p, b, c, d, e) = (a.get("p"), a.get("b"), a.get("c"), a.get("d"), a.get("e"));
            let lhs = binomial(p * b + c, p * d + e);
            Evaluation::congruence(int(lhs), int(binomial(b, d) * binomial(c, e)), p, 1)
        }
        LucasCube => {
            let (p, b, d) = (a.get("p"), a.get("b"), a.get("d"));
            Evaluation::congruence(int(binomial(p * b, p * d)), int(binomial(b, d)), p, 3)
        }
        Gessel => {
            let (p, j) = (a.get("p"), a.get("j"));
            let rhs = int(sign(j - 1)) * ratio(p, j);
            Evaluation::congruence(int(binomial(p, j)), rhs, p, 2)
        }
        HarmonicIdentity => {
            let n = a.get("n");
            let lhs: ExactRational = (1..=n)
                .map(|k| int(sign(k) * binomial(n, k) * binomial(n + k, k)) / int(k))
                .sum();
            Evaluation::identity(lhs, int(-2) * harmonic(n as u64), None)
        }
        PartialFraction => {
            let n = a.get("n");
            let y = ratio(a.get("y_num"), a.get("y_den"));
            let (lhs, rhs) = partial_fraction_sides(n, &y);
            Evaluation::identity(lhs, rhs, None).with_note(format!("y={y}"))
        }
        FloorBinomial => {
            let (p, k) = (a.get("p"), a.get("k"));
            let f = p / 3;
            let lhs = sign(k) * binomial(f, k) * binomial(f + k, k);
            Evaluation::congruence(int(lhs), trinomial_weight(k), p, 1)
        }
        Cor24RecipRange => {
            let p = a.get("p");
            Evaluation::congruence(recip_sum(1..p), recip_sum(1..=p / 3), p, 1)
        }
        Cor24RecipValue => {
            let p = a.get("p");
            Evaluation::congruence(recip_sum(1..=p / 3), int(3) * quotient(&int(3), p), p, 1)
        }
        Cor24ShiftRange => {
            let (p, i) = (a.get("p"), a.get("i"));
            Evaluation::congruence(shift_sum(0..p, i), shift_sum(0..=p / 3, i), p, 1)
        }
        Cor24ShiftValue => {
            let (p, i) = (a.get("p"), a.get("i"));
            Evaluation::congruence(shift_sum(0..=p / 3, i), ExactRational::zero(), p, 1)
        }
        ReductionQuotient | ReductionPower => {
            let (p, m, n) = (a.get("p"), a.get("m"), a.get("n"));
            let (from_zero, form) = if a.id() == ReductionPower {
                (true, ReductionForm::Power)
            } else {
                (false, ReductionForm::Quotient)
            };
            let lhs = reduction_lhs(p as u64, m as u64, n as u64, from_zero);
            let rhs = reduction_rhs(p as u64, m as u64, n as u64, form);
            let eval = Evaluation::congruence(lhs, rhs, p, 3);
            if 3 * m > n {
                eval.with_note("vacuous: C(n, 3m) = 0")
            } else {
                eval
            }
        }
        other => unreachable!("{other} is not a classical check"),
    }
}

fn partial_fraction_sides(n: i64, y: &ExactRational) -> (ExactRational, ExactRational) {
    let lhs: ExactRational = (0..=n)
        .map(|k| int(sign(k) * binomial(n, k) * binomial(n + k, k)) / (y + int(k)))
        .sum();
    let mut rhs = int(sign(n)) / y;
    for j in 1..=n {
        rhs *= (y - int(j)) / (y + int(j));
    }
    (lhs, rhs)
}

fn recip_sum(range: impl Iterator<Item = i64>) -> ExactRational {
    range.map(|k| trinomial_weight(k) / int(k)).sum()
}

fn shift_sum(range: impl Iterator<Item = i64>, i: i64) -> ExactRational {
    range.map(|k| trinomial_weight(k) / int(k + i)).sum()
}

fn run(id: CheckId, params: &[(&str, i64)]) -> Result<CheckOutcome, CheckError> {
    super::evaluate(&CheckCase::new(id, params.iter().copied()))
}

/// `a_0(pn) ≡ a_0(n) (mod p^3)`.
pub fn check_main(p: i64, n: i64) -> Result<CheckOutcome, CheckError> {
    run(CheckId::MainSupercongruence, &[("p", p), ("n", n)])
}

/// `a_0(p^r n) ≡ a_0(p^(r-1) n) (mod p^(3r))`.
pub fn check_higher(p: i64, r: i64, n: i64) -> Result<CheckOutcome, CheckError> {
    run(CheckId::Higher, &[("p", p), ("r", r), ("n", n)])
}

/// `a_i(pn) ≡ 0 (mod p^2)` for `0 < i < p/3`.
pub fn check_ai_vanish(p: i64, i: i64, n: i64) -> Result<CheckOutcome, CheckError> {
    run(CheckId::Thm31Vanish, &[("p", p), ("i", i), ("n", n)])
}

/// Lucas' congruence modulo `p` and its mod `p^3` strengthening for `C(pb, pd)`.
pub fn check_lucas(
    p: i64,
    b: i64,
    c: i64,
    d: i64,
    e: i64,
) -> Result<Vec<CheckOutcome>, CheckError> {
    Ok(vec![
        run(
            CheckId::Lucas,
            &[("p", p), ("b", b), ("c", c), ("d", d), ("e", e)],
        )?,
        run(CheckId::LucasCube, &[("p", p), ("b", b), ("d", d)])?,
    ])
}

/// `C(p, j) ≡ (-1)^(j-1) p/j (mod p^2)`.
pub fn check_gessel(p: i64, j: i64) -> Result<CheckOutcome, CheckError> {
    run(CheckId::Gessel, &[("p", p), ("j", j)])
}

/// The harmonic-number identity, checked for exact equality.
pub fn check_harmonic_identity(n: i64) -> Result<CheckOutcome, CheckError> {
    run(CheckId::HarmonicIdentity, &[("n", n)])
}

/// The partial-fraction identity at a rational point `y`, checked for exact equality.
pub fn check_partial_fraction(n: i64, y: &ExactRational) -> Result<CheckOutcome, CheckError> {
    let (num, den) = (y.numer(), y.denom());
    let to_i64 = |v: &num_bigint::BigInt| {
        i64::try_from(v).map_err(|_| CheckError::Hypothesis {
            id: CheckId::PartialFraction,
            reason: format!("y = {y} does not fit in 64-bit parameters"),
        })
    };
    run(
        CheckId::PartialFraction,
        &[("n", n), ("y_num", to_i64(num)?), ("y_den", to_i64(den)?)],
    )
}

/// `(-1)^k C(⌊p/3⌋,k) C(⌊p/3⌋+k,k) ≡ C(3k;k,k,k) 3^(-3k) (mod p)`.
pub fn check_floor_binomial(p: i64, k: i64) -> Result<CheckOutcome, CheckError> {
    run(CheckId::FloorBinomial, &[("p", p), ("k", k)])
}

/// The four chained congruences for trinomial sums at shift `i`.
pub fn check_trinomial_sums(p: i64, i: i64) -> Result<Vec<CheckOutcome>, CheckError> {
    let shifted = [("p", p), ("i", i)];
    // validate i first so a bad shift is rejected before any sum is built
    CheckCase::new(CheckId::Cor24ShiftValue, shifted).validate()?;
    Ok(vec![
        run(CheckId::Cor24RecipRange, &[("p", p)])?,
        run(CheckId::Cor24RecipValue, &[("p", p)])?,
        run(CheckId::Cor24ShiftRange, &shifted)?,
        run(CheckId::Cor24ShiftValue, &shifted)?,
    ])
}

/// Both displayed forms of the single-sum reduction, modulo `p^3`.
pub fn check_reduction(p: i64, m: i64, n: i64) -> Result<Vec<CheckOutcome>, CheckError> {
    let params = [("p", p), ("m", m), ("n", n)];
    Ok(vec![
        run(CheckId::ReductionQuotient, &params)?,
        run(CheckId::ReductionPower, &params)?,
    ])
}
