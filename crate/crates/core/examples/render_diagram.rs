//! Writes an SVG of diagram `index` of size `n` (defaults: 3, 7).
//!
//! cargo run --example render_diagram -- 3 7 > d.svg

use brauer::diagrams::{diagram_at, matching_count, render_svg};
use brauer::Variant;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("number"));
    let n = args.next().unwrap_or(3) as usize;
    let index = args.next().unwrap_or(7);
    assert!(index < matching_count(n), "index out of range");
    print!("{}", render_svg(&diagram_at(n, index), Variant::F));
}
