// Binomial and multinomial congruences modulo p^2 and p^3.

use az_core::checks::{
    check_cor52, check_cor55, check_gessel, check_lemma51, check_lucas, check_sagan, Lemma51, Sagan,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for o in check_lucas(5, 2, 0, 1, 0)? {
        println!(
            "{:<12} {}  achieved {}",
            o.check_id,
            o.case().params_text(),
            o.achieved_valuation.unwrap()
        );
    }
    for j in 1..5 {
        assert!(check_gessel(5, j)?.passed);
    }

    let parts = [
        Lemma51::L1a {
            p: 5,
            a: 3,
            b: 1,
            j: 2,
        },
        Lemma51::L2 {
            p: 7,
            m: 2,
            n: 3,
            r: 4,
        },
        Lemma51::L4 { p: 11, m: 3, r: 8 },
        Lemma51::L5v2 {
            p: 7,
            m: 1,
            n: 5,
            r: 3,
        },
    ];
    for part in parts {
        let o = check_lemma51(part)?;
        println!(
            "{:<12} {}  achieved {} {}",
            o.check_id,
            o.case().params_text(),
            o.achieved_valuation.unwrap(),
            o.note
        );
        assert!(o.passed);
    }

    let o = check_sagan(Sagan::Eq27 {
        p: 5,
        n1: 3,
        n0: 2,
        k1: 1,
        k0: 4,
    })?;
    println!(
        "{:<12} {}  achieved {}",
        o.check_id,
        o.case().params_text(),
        o.achieved_valuation.unwrap()
    );

    // Multinomials with A equal parts; A = 3 is the trinomial case.
    for a in 2..=5 {
        let o = check_cor52(7, 2, 5, a)?;
        println!(
            "A = {a}: {} achieved {}",
            o.check_id,
            o.achieved_valuation.unwrap()
        );
        assert!(o.passed);
    }

    for r in 1..7 {
        let o = check_cor55(7, 1, 4, r)?;
        assert!(o.passed, "{}", o.note);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lemma toolbox example");
}
