//! Compares the diagram sum with the Leibniz determinant for n = 1..=N.

use std::time::Instant;

use brauer::verify::verify_theorem;
use brauer::Variant;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(6, |s| s.parse().expect("size"));
    for n in 1..=max {
        for v in Variant::ALL {
            let start = Instant::now();
            let r = verify_theorem(n, v).expect("size in range");
            println!(
                "n={n} {v}: holds={} diagrams={} distinct monomials={} ({:.2?})",
                r.holds,
                r.diagrams,
                r.distinct_monomials,
                start.elapsed()
            );
        }
    }
}
