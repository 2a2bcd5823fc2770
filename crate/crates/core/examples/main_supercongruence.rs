// The supercongruence a_0(pn) ≡ a_0(n) (mod p^3), its vanishing companion
// for a_i and the higher-power strengthening.

use az_core::checks::{check_ai_vanish, check_higher, check_main, check_reduction};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for p in [5, 7, 11, 13] {
        let vals: Vec<String> = (1..=6)
            .map(|n| {
                check_main(p, n).map(|o| {
                    o.achieved_valuation
                        .map(|v| v.to_string())
                        .unwrap_or_default()
                })
            })
            .collect::<Result<_, _>>()?;
        println!(
            "p = {p:2}: v_p(a_0(pn) - a_0(n)) for n = 1..6: {}",
            vals.join(" ")
        );
    }
    let o = check_main(5, 1)?;
    assert!(o.passed);

    let o = check_ai_vanish(13, 4, 3)?;
    println!(
        "a_4(39) has 13-adic valuation {}",
        o.achieved_valuation.unwrap()
    );
    assert!(o.passed);
    assert!(check_ai_vanish(5, 2, 1).is_err(), "i must stay below p/3");

    for n in 1..=2 {
        let o = check_higher(5, 2, n)?;
        println!(
            "v_5(a_0({}) - a_0({})) = {} (needs 6)",
            25 * n,
            5 * n,
            o.achieved_valuation.unwrap()
        );
    }

    for o in check_reduction(7, 1, 5)? {
        println!(
            "{} p=7 m=1 n=5: achieved {}",
            o.check_id,
            o.achieved_valuation.unwrap()
        );
        assert!(o.passed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("main supercongruence example");
}
