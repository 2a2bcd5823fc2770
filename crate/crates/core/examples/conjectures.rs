// The closing trinomial sums and the conjectured behaviour of a_i(pn)
// and b_1(pn) modulo p^3. Conjectural checks report their achieved
// valuation; a failure would be a finding.

use az_core::checks::{
    check_b1_chain, check_closecong, check_conj71, check_d_identities, check_e, check_t, TSum,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [5, 7, 11, 13, 17] {
        let t: Vec<String> = [TSum::T1, TSum::T2, TSum::T3]
            .into_iter()
            .map(|w| check_t(p, w).map(|o| o.achieved_valuation.unwrap().to_string()))
            .collect::<Result<_, _>>()?;
        println!("p = {p:2}: T1..T3 valuations {}", t.join(" "));
    }

    for o in check_d_identities(7)?.into_iter().chain([check_e(7)?]) {
        println!(
            "{:<13} p=7  achieved {:>3}  {}",
            o.check_id,
            o.achieved_valuation.unwrap(),
            o.note
        );
    }

    for (m, n) in [(0, 4), (1, 5), (1, 6)] {
        let o = check_closecong(5, m, n)?;
        println!(
            "CLOSECONG p=5 m={m} n={n}: achieved {} (needs 2)",
            o.achieved_valuation.unwrap()
        );
    }

    for i in 1..=2 {
        for o in check_conj71(7, i, 2)? {
            println!(
                "{} i={i}: achieved {}",
                o.check_id,
                o.achieved_valuation.unwrap()
            );
            assert!(o.is_conjectural());
        }
    }
    for o in check_b1_chain(5, 3, 1)? {
        println!(
            "{} {}: achieved {}",
            o.check_id,
            o.case().params_text(),
            o.achieved_valuation.unwrap()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("conjectures example");
}
