//! Walks one diagram to its Leibniz term and back, and shows that swapping
//! the rows inverts the permutation.

use brauer::bijection::{diagram_to_term, sign_of_term, term_to_diagram};
use brauer::diagrams::{crossing_number, BrauerDiagram, Edge};
use brauer::Variant;

fn main() {
    let d = BrauerDiagram::from_edges(
        7,
        &[
            Edge::Cup(1, 3),
            Edge::Cup(2, 6),
            Edge::Cap(0, 5),
            Edge::Cap(3, 4),
            Edge::Arc { top: 5, bottom: 1 },
            Edge::Arc { top: 0, bottom: 2 },
            Edge::Arc { top: 4, bottom: 6 },
        ],
    )
    .expect("valid diagram");
    println!(
        "diagram:   {}",
        serde_json::to_string(&d.to_json()).unwrap()
    );
    println!("crossings: {}", crossing_number(&d));
    for v in Variant::ALL {
        let t = diagram_to_term(&d, v);
        println!("\n{v} labeling");
        println!(
            "  term:      {}",
            serde_json::to_string(&t.to_json()).unwrap()
        );
        println!("  perm:      {}", t.perm());
        println!("  monomial:  {}", t.monomial());
        println!("  sign:      {}", sign_of_term(&t, v));
        let back = term_to_diagram(&t, v).expect("surviving term");
        println!("  round trip ok: {}", back == d);
        let swapped = diagram_to_term(&d.swap_rows(v), v);
        println!(
            "  swapped rows give inverse: {}",
            *swapped.perm() == t.perm().inverse()
        );
    }
}
