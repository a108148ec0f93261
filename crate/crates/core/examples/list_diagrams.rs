//! Lists every diagram of one size with its crossing number and weights.

use brauer::diagrams::{crossing_number, enumerate_diagrams, weight};
use brauer::Variant;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(3, |s| s.parse().expect("size"));
    println!(
        "{:>4} {:>3}  {:<28} {:<24} B weight",
        "idx", "chi", "edges", "F weight"
    );
    for (idx, d) in enumerate_diagrams(n).enumerate() {
        let edges = d
            .to_json()
            .edges
            .iter()
            .map(|[u, v]| format!("{u}-{v}"))
            .collect::<Vec<_>>()
            .join(" ");
        println!(
            "{idx:>4} {:>3}  {edges:<28} {:<24} {}",
            crossing_number(&d),
            weight(&d, Variant::F).to_string(),
            weight(&d, Variant::B)
        );
    }
}
