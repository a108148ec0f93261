//! Expands det(M_F), det(M_B) and the permanent of M_F for a small size.
//!
//! cargo run --example expand_determinant -- 3

use brauer::matrices::{build_matrix, leibniz_determinant, permanent};
use brauer::Variant;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(3, |s| s.parse().expect("size"));
    for v in Variant::ALL {
        let det = leibniz_determinant(&build_matrix(n, v));
        println!(
            "det M_{v} ({} terms):\n  {det}\n",
            det.count_distinct_terms()
        );
    }
    println!("perm M_F:\n  {}", permanent(&build_matrix(n, Variant::F)));
}
