//! det = pf^2 for antisymmetric matrices, and det = 0 in odd size.

use brauer::counting::{distinct_skew_terms, double_factorial, sylvester_v};
use brauer::matrices::{pfaffian, verify_cayley};

fn main() {
    println!("pf(4x4) = {}", pfaffian(2));
    for n in 1..=8 {
        let r = verify_cayley(n);
        println!(
            "n={n}: holds={} det terms={}",
            r.holds,
            r.lhs.count_distinct_terms()
        );
    }
    for m in 1..=4 {
        println!(
            "size {}: {} distinct terms, (2m-1)!! v_m = {}",
            2 * m,
            distinct_skew_terms(2 * m).unwrap(),
            double_factorial(2 * m as i64 - 1).unwrap() * sylvester_v(m).unwrap()
        );
    }
}
