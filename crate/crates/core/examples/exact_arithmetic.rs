// Exact factorials, generalized binomials, trinomial coefficients and
// harmonic numbers.

use az_core::exact::{binomial, format_rational, harmonic, int_pow, ratio, trinomial, ExactInt};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Negative upper arguments follow the falling-factorial convention.
    for (a, k) in [(5, 2), (-1, 3), (-3, 7), (4, 7)] {
        println!("C({a}, {k}) = {}", binomial(a, k));
    }
    assert_eq!(binomial(-3, 7), ExactInt::from(-36));

    // C(3k; k,k,k) = C(3k,k) C(2k,k)
    for k in 0..5u64 {
        let t = trinomial(k);
        assert_eq!(
            t,
            binomial(3 * k as i64, k as i64) * binomial(2 * k as i64, k as i64)
        );
        println!("C({}; {k},{k},{k}) = {t}", 3 * k);
    }

    let h6 = harmonic(6);
    println!("H_6 = {}", format_rational(&h6));
    assert_eq!(h6, ratio(49, 20));

    let x = int_pow(&ratio(1, 3), -4)?;
    println!("(1/3)^-4 = {}", format_rational(&x));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact arithmetic example");
}
