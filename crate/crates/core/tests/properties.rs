use proptest::prelude::*;

use brauer::algebra::{GaussianInteger, IndexedVar, Integer, Monomial, Polynomial};
use brauer::bijection::{diagram_to_term, term_to_diagram, Permutation};
use brauer::counting::{double_factorial, stirling_row, stirling_weighted_sum};
use brauer::diagrams::{crossing_number, diagram_at, diagram_index, matching_count};
use brauer::matrices::{build_matrix, leibniz_determinant};
use brauer::verify::{forward_backward_mismatch, stream_and_diagram_multisets};
use brauer::Variant;

fn var() -> impl Strategy<Value = IndexedVar> {
    (1u32..=3, 1u32..=3, any::<bool>()).prop_filter_map("off-domain", |(i, j, is_b)| {
        if is_b {
            IndexedVar::b(i, j).ok()
        } else {
            IndexedVar::a(i, j).ok()
        }
    })
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), 1u32..=3), 0..4).prop_map(Monomial::from_factors)
}

fn coefficient() -> impl Strategy<Value = GaussianInteger> {
    prop_oneof![
        (-5i64..=5, -5i64..=5).prop_map(|(re, im)| GaussianInteger::new(re, im)),
        (any::<i64>(), any::<i64>()).prop_map(|(re, im)| GaussianInteger::new(re, im)),
    ]
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), coefficient()), 0..6).prop_map(Polynomial::from_terms)
}

proptest! {
    #[test]
    fn integer_ops_match_i128(x in any::<i64>(), y in any::<i64>()) {
        let (a, b) = (Integer::from(x), Integer::from(y));
        let (x, y) = (x as i128, y as i128);
        prop_assert_eq!((&a + &b).to_string(), (x + y).to_string());
        prop_assert_eq!((&a - &b).to_string(), (x - y).to_string());
        prop_assert_eq!((&a * &b).to_string(), (x * y).to_string());
    }

    #[test]
    fn ring_laws(p in polynomial(), q in polynomial(), r in polynomial()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Polynomial::constant(1), p.clone());
        prop_assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn text_form_round_trips(p in polynomial()) {
        let text = p.to_string();
        let back: Polynomial = text.parse().unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn normal_form_ignores_term_order(
        terms in prop::collection::vec((monomial(), coefficient()), 0..8),
    ) {
        let forward = Polynomial::from_terms(terms.clone());
        let backward = Polynomial::from_terms(terms.into_iter().rev());
        prop_assert_eq!(forward.to_string(), backward.to_string());
        prop_assert!(forward.terms().all(|(_, c)| !c.is_zero()));
    }

    #[test]
    fn diagram_index_round_trips(n in 1usize..=8, seed in any::<u64>()) {
        let idx = seed % matching_count(n);
        let d = diagram_at(n, idx);
        prop_assert_eq!(diagram_index(&d), idx);
        prop_assert_eq!(crossing_number(&d.reflect()), crossing_number(&d));
    }

    #[test]
    fn bijection_round_trips_at_larger_sizes(n in 1usize..=8, seed in any::<u64>()) {
        let d = diagram_at(n, seed % matching_count(n));
        for v in Variant::ALL {
            let t = diagram_to_term(&d, v);
            prop_assert!(t.is_surviving());
            prop_assert_eq!(term_to_diagram(&t, v).unwrap(), d.clone());
            let swapped = diagram_to_term(&d.swap_rows(v), v);
            prop_assert_eq!(swapped.perm(), &t.perm().inverse());
        }
    }

    #[test]
    fn inverse_preserves_inversions(images in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Permutation::new(images).unwrap();
        prop_assert_eq!(p.inverse().inversion_number(), p.inversion_number());
        prop_assert_eq!(p.inverse().cycle_count(), p.cycle_count());
    }
}

#[test]
fn forward_and_backward_determinants_differ_by_b_degree() {
    for n in 1..=6 {
        let f = leibniz_determinant(&build_matrix(n, Variant::F));
        let b = leibniz_determinant(&build_matrix(n, Variant::B));
        assert_eq!(forward_backward_mismatch(&f, &b), None, "n={n}");
    }
}

#[test]
fn surviving_products_match_signed_weights() {
    for n in 0..=6 {
        for v in Variant::ALL {
            let (stream, diagrams) = stream_and_diagram_multisets(n, v).unwrap();
            assert_eq!(stream, diagrams, "n={n} variant={v}");
        }
    }
}

#[test]
fn stirling_rows_give_rising_factorials() {
    for n in 0..=10usize {
        let row = stirling_row(n).unwrap();
        for x in 1..=3u128 {
            let lhs: u128 = row
                .iter()
                .enumerate()
                .map(|(k, s)| s * x.pow(k as u32))
                .sum();
            let rising: u128 = (0..n as u128).map(|k| x + k).product();
            assert_eq!(lhs, rising, "n={n} x={x}");
        }
    }
}

#[test]
fn weighted_sum_is_odd_double_factorial() {
    for n in 0..=10usize {
        assert_eq!(
            stirling_weighted_sum(n, 2).unwrap(),
            double_factorial(2 * n as i64 - 1).unwrap()
        );
    }
}
