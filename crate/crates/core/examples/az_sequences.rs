// The Almkvist–Zudilin numbers, the Apéry numbers and the auxiliary b_j.

use az_core::exact::{format_rational, int, ratio};
use az_core::sequences::{
    apery, az_a, az_b, az_b_kernel, global_cache, reduction_rhs, ReductionForm,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a0: Vec<String> = (0..=8).map(|n| az_a(0, n).to_string()).collect();
    println!("a_0(0..8) = {}", a0.join(", "));
    assert_eq!(az_a(0, 5), 2997.into());

    let ap: Vec<String> = (0..=4).map(|n| apery(n).to_string()).collect();
    println!("A(0..4)   = {}", ap.join(", "));

    for i in 1..=2 {
        let row: Vec<String> = (1..=6).map(|n| az_a(i, n).to_string()).collect();
        println!("a_{i}(1..6) = {}", row.join(", "));
    }

    // Two variants of b_j: with and without the (n - 3k) weight.
    println!(
        "b_1(2) = {}, kernel b_1(2) = {}",
        format_rational(&az_b(1, 2)),
        format_rational(&az_b_kernel(1, 2))
    );
    assert_eq!(az_b(2, 1), ratio(-3, 2));

    // a_1(n) = -a_0(n) + (n+3)/3 b_1(n) with the kernel form.
    for n in 1..=10u64 {
        let rhs = -int(az_a(0, n)) + ratio(n as i64 + 3, 3) * az_b_kernel(1, n);
        assert_eq!(int(az_a(1, n)), rhs);
    }

    let k = reduction_rhs(5, 1, 4, ReductionForm::Power);
    println!(
        "reduction right side at p=5 m=1 n=4: {}",
        format_rational(&k)
    );
    println!("{} values memoized", global_cache().len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sequence example");
}
