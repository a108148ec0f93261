//! Prints the counting table for n = 0..=10.

use brauer::counting::count_table;

fn main() {
    println!(
        "{:>2} {:>12} {:>12} {:>12}  stirling row",
        "n", "(2n-1)!!", "weighted", "v_n"
    );
    for n in 0..=10 {
        let t = count_table(n).unwrap();
        println!(
            "{:>2} {:>12} {:>12} {:>12}  {:?}",
            t.n, t.double_factorial, t.weighted_sum, t.sylvester_v, t.stirling_row
        );
    }
}
