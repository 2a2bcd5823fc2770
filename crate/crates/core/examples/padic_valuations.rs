// Valuations, congruences, Fermat quotients and residues.

use az_core::exact::{format_rational, int, ratio};
use az_core::padic::{congruent, fermat_quotient, reduce_residue, vp, PadicContext, Valuation};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = ratio(250, 3);
    println!("v_5(250/3) = {}", vp(&x, 5));
    assert_eq!(vp(&x, 5), Valuation::Finite(3));
    assert_eq!(vp(&int(0), 5), Valuation::Infinite);

    // a_0(5) = 2997 and a_0(1) = -3 agree modulo 5^3.
    let ctx = PadicContext::new(5, 3)?;
    assert!(congruent(&int(2997), &int(-3), &ctx));
    println!("2997 ≡ -3 (mod {})", ctx.modulus());

    let q = fermat_quotient(&ratio(1, 3), 5)?;
    println!("q_5(1/3) = {}", format_rational(&q));
    assert_eq!(q, ratio(-16, 81));

    let ctx = PadicContext::new(7, 2)?;
    let r = reduce_residue(&ratio(1, 3), &ctx)?;
    println!("1/3 mod 49 = {r}");
    assert!(congruent(&int(r), &ratio(1, 3), &ctx));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("p-adic example");
}
