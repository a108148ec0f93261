//! Exhaustive checks over all diagrams (or terms) of a given size.
//!
//! Every check reports counts plus the first counterexample in enumeration
//! order, so reports are identical however the work is split across threads.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{GaussianInteger, Monomial, Polynomial, VarKind};
use crate::bijection::{
    diagram_to_term, enumerate_terms, factorial, sign_of_term, term_to_diagram, Factor,
    Permutation, TermDescriptor, TermJson,
};
use crate::counting::surviving_term_count;
use crate::diagrams::{
    crossing_number, diagram_at, matching_count, BrauerDiagram, DiagramJson, Edge,
};
use crate::matrices::{
    brauer_determinant, build_matrix, leibniz_determinant, leibniz_term_stream, SymbolicMatrix,
};
use crate::{pairs, Error, Result, Variant};

/// Largest size accepted by the symbolic verification routines.
pub const MAX_SYMBOLIC_N: usize = 8;

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_SYMBOLIC_N {
        return Err(Error::SizeOutOfRange {
            n,
            reason: format!("expected {min}..={MAX_SYMBOLIC_N}"),
        });
    }
    Ok(())
}

/// `(-1)^(n choose 2)` for `B`, `1` for `F`.
pub fn global_sign(n: usize, variant: Variant) -> GaussianInteger {
    match variant {
        Variant::F => GaussianInteger::ONE,
        Variant::B => GaussianInteger::sign(pairs(n)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub monomial: String,
    pub brauer: String,
    pub leibniz: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub variant: Variant,
    pub holds: bool,
    pub diagrams: u64,
    /// Leibniz products before cancellation, with multiplicity.
    pub leibniz_products: u64,
    /// Products surviving cancellation.
    pub surviving_terms: u128,
    pub distinct_monomials: usize,
    pub counterexample: Option<Counterexample>,
}

/// Compares the diagram-sum determinant with the Leibniz determinant.
pub fn verify_theorem(n: usize, variant: Variant) -> Result<TheoremReport> {
    check_size(n, 1)?;
    let (brauer, leibniz) = rayon::join(
        || brauer_determinant(n, variant),
        || leibniz_determinant(&build_matrix(n, variant)),
    );
    let leibniz_products = (0..factorial(n))
        .into_par_iter()
        .map(|idx| {
            let p = Permutation::nth(n, idx);
            1u64 << (0..n).filter(|&i| p.apply(i) != i).count()
        })
        .sum();
    let counterexample = brauer
        .first_difference(&leibniz)
        .map(|(m, b, l)| Counterexample {
            monomial: m.to_string(),
            brauer: b.to_string(),
            leibniz: l.to_string(),
        });
    Ok(TheoremReport {
        n,
        variant,
        holds: counterexample.is_none(),
        diagrams: matching_count(n),
        leibniz_products,
        surviving_terms: surviving_term_count(n)?,
        distinct_monomials: leibniz.count_distinct_terms(),
        counterexample,
    })
}

/// Counts over a family of instances, remembering the first failure.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Tally {
    instances: u64,
    failures: u64,
    first_failure: Option<u64>,
}

impl Tally {
    fn record(&mut self, ok: bool, index: u64) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            self.first_failure = Some(self.first_failure.map_or(index, |f| f.min(index)));
        }
    }

    fn merge(self, other: Tally) -> Tally {
        let first_failure = match (self.first_failure, other.first_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Tally {
            instances: self.instances + other.instances,
            failures: self.failures + other.failures,
            first_failure,
        }
    }
}

fn over_diagrams<const K: usize>(
    n: usize,
    check: impl Fn(&BrauerDiagram, u64, &mut [Tally; K]) + Sync,
) -> [Tally; K] {
    (0..matching_count(n))
        .into_par_iter()
        .fold(
            || [Tally::default(); K],
            |mut acc, idx| {
                check(&diagram_at(n, idx), idx, &mut acc);
                acc
            },
        )
        .reduce(
            || [Tally::default(); K],
            |a, b| std::array::from_fn(|k| a[k].merge(b[k])),
        )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub instances: u64,
    pub failures: u64,
    /// First diagram (in enumeration order) on which the property fails.
    pub first_failure: Option<DiagramJson>,
}

impl PropertyCheck {
    fn from_tally(name: &'static str, n: usize, t: Tally) -> Self {
        PropertyCheck {
            name,
            instances: t.instances,
            failures: t.failures,
            first_failure: t.first_failure.map(|i| diagram_at(n, i).to_json()),
        }
    }

    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub checks: Vec<PropertyCheck>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(PropertyCheck::holds)
    }
}

fn parity(d: &BrauerDiagram) -> usize {
    crossing_number(d) % 2
}

/// `d` with the edges at `removed` (indices into `d.edges()`) replaced by
/// `added`.
fn rewire(
    d: &BrauerDiagram,
    edges: &[Edge],
    removed: [usize; 2],
    added: [Edge; 2],
) -> BrauerDiagram {
    let mut next: Vec<Edge> = edges
        .iter()
        .enumerate()
        .filter(|(k, _)| !removed.contains(k))
        .map(|(_, e)| *e)
        .collect();
    next.extend(added);
    BrauerDiagram::from_edges(d.n(), &next).expect("surgery keeps a perfect matching")
}

const LEMMA_NAMES: [&str; 9] = [
    "only_arcs_forward",
    "only_arcs_backward",
    "surgery_a_cup_cap_to_parallel_arcs",
    "surgery_b_cup_cap_to_crossed_arcs",
    "surgery_b_uncross_arcs",
    "surgery_c_cup_and_arc",
    "surgery_d_nested_to_interleaved_cups",
    "swap_rows_inverts_forward",
    "swap_rows_inverts_backward",
];

/// Runs the diagram-level properties over every diagram of size `n`:
///
/// * arc-only diagrams: crossings equal the inversions of the forward
///   permutation, and crossings plus inversions of the backward permutation
///   equal `n choose 2`;
/// * edge surgeries: a cup `(i,j)` and cap `(k,l)` replaced by arcs
///   `i-k, j-l` keep the crossing parity, by `i-l, j-k` flip it; exchanging
///   the bottom ends of two arcs flips it; a cup `(i,k)` and an arc from `j`
///   with `i<j<k` replaced by an arc from `i` and a cup `(j,k)` flips it;
///   nested cups `(i,l),(j,k)` replaced by interleaved `(i,k),(j,l)` flip it;
/// * exchanging cups and caps (in labels) inverts the associated permutation.
pub fn verify_lemmas(n: usize) -> Result<LemmaReport> {
    check_size(n, 0)?;
    let np = pairs(n);
    let tallies = over_diagrams::<9>(n, |d, idx, t| {
        let chi = crossing_number(d);
        if d.arc_count() == n {
            let inv_f = diagram_to_term(d, Variant::F).perm().inversion_number();
            let inv_b = diagram_to_term(d, Variant::B).perm().inversion_number();
            t[0].record(chi == inv_f, idx);
            t[1].record(chi + inv_b == np, idx);
        }
        let edges = d.edges();
        let p = chi % 2;
        for (x, ex) in edges.iter().enumerate() {
            for (y, ey) in edges.iter().enumerate() {
                match (*ex, *ey) {
                    (Edge::Cup(i, j), Edge::Cap(k, l)) => {
                        let straight = rewire(
                            d,
                            &edges,
                            [x, y],
                            [
                                Edge::Arc { top: i, bottom: k },
                                Edge::Arc { top: j, bottom: l },
                            ],
                        );
                        t[2].record(parity(&straight) == p, idx);
                        let crossed = rewire(
                            d,
                            &edges,
                            [x, y],
                            [
                                Edge::Arc { top: i, bottom: l },
                                Edge::Arc { top: j, bottom: k },
                            ],
                        );
                        t[3].record(parity(&crossed) != p, idx);
                    }
                    (
                        Edge::Arc {
                            top: t1,
                            bottom: b1,
                        },
                        Edge::Arc {
                            top: t2,
                            bottom: b2,
                        },
                    ) if t1 < t2 => {
                        let swapped = rewire(
                            d,
                            &edges,
                            [x, y],
                            [
                                Edge::Arc {
                                    top: t1,
                                    bottom: b2,
                                },
                                Edge::Arc {
                                    top: t2,
                                    bottom: b1,
                                },
                            ],
                        );
                        t[4].record(parity(&swapped) != p, idx);
                    }
                    (Edge::Cup(i, k), Edge::Arc { top: j, bottom: l }) if i < j && j < k => {
                        let moved = rewire(
                            d,
                            &edges,
                            [x, y],
                            [Edge::Arc { top: i, bottom: l }, Edge::Cup(j, k)],
                        );
                        t[5].record(parity(&moved) != p, idx);
                    }
                    (Edge::Cup(i, l), Edge::Cup(j, k)) if i < j && k < l => {
                        let crossed = rewire(d, &edges, [x, y], [Edge::Cup(i, k), Edge::Cup(j, l)]);
                        t[6].record(parity(&crossed) != p, idx);
                    }
                    _ => {}
                }
            }
        }
        for (slot, lab) in [(7, Variant::F), (8, Variant::B)] {
            let p = diagram_to_term(d, lab).perm().clone();
            let q = diagram_to_term(&d.swap_rows(lab), lab).perm().clone();
            t[slot].record(q == p.inverse(), idx);
        }
    });
    Ok(LemmaReport {
        n,
        checks: LEMMA_NAMES
            .iter()
            .zip(tallies)
            .map(|(name, t)| PropertyCheck::from_tally(name, n, t))
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionFailure {
    pub labeling: Variant,
    pub kind: &'static str,
    pub diagram: Option<DiagramJson>,
    pub term: Option<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub diagrams_checked: u64,
    pub terms_checked: u64,
    pub holds: bool,
    pub failure: Option<BijectionFailure>,
}

/// Round trips in both directions, for both labelings, over every diagram
/// and every surviving term of size `n`.
pub fn verify_bijection(n: usize) -> Result<BijectionReport> {
    check_size(n, 0)?;
    let mut failure = None;
    let mut diagrams_checked = 0;
    let mut terms_checked = 0;
    for lab in Variant::ALL {
        let [t] = over_diagrams::<1>(n, |d, idx, t| {
            let term = diagram_to_term(d, lab);
            let ok = term.is_surviving()
                && term.monomial() == crate::diagrams::weight(d, lab)
                && term_to_diagram(&term, lab).ok().as_ref() == Some(d);
            t[0].record(ok, idx);
        });
        diagrams_checked += t.instances;
        if let (None, Some(idx)) = (&failure, t.first_failure) {
            let d = diagram_at(n, idx);
            failure = Some(BijectionFailure {
                labeling: lab,
                kind: "diagram_roundtrip",
                term: Some(diagram_to_term(&d, lab).to_json()),
                diagram: Some(d.to_json()),
            });
        }
        let bad_term = enumerate_terms(n).find(|term| {
            terms_checked += 1;
            match term_to_diagram(term, lab) {
                Ok(d) => &diagram_to_term(&d, lab) != term,
                Err(_) => true,
            }
        });
        if let (None, Some(term)) = (&failure, bad_term) {
            failure = Some(BijectionFailure {
                labeling: lab,
                kind: "term_roundtrip",
                diagram: term_to_diagram(&term, lab).ok().map(|d| d.to_json()),
                term: Some(term.to_json()),
            });
        }
    }
    Ok(BijectionReport {
        n,
        diagrams_checked,
        terms_checked,
        holds: failure.is_none(),
        failure,
    })
}

/// Coefficient of a term read directly off the matrix entries: the sign of
/// the permutation times the coefficient of the chosen variable in each
/// `m[i, π(i)]`.
pub fn direct_term_coefficient(m: &SymbolicMatrix, t: &TermDescriptor) -> GaussianInteger {
    let p = t.perm();
    let mut c = GaussianInteger::sign(p.inversion_number());
    for i in 0..p.len() {
        let (x, y) = (i as u32 + 1, p.apply(i) as u32 + 1);
        let var = match t.factor(i) {
            Factor::A => crate::algebra::IndexedVar::a_hat(x, y),
            Factor::B => crate::algebra::IndexedVar::b_hat(x, y),
        };
        c = &c * &m.entry(i, p.apply(i)).coefficient(&Monomial::var(var));
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignReport {
    pub n: usize,
    pub variant: Variant,
    pub checked: u64,
    pub holds: bool,
    pub first_failure: Option<DiagramJson>,
}

/// For every diagram, `(-1)^crossings` times the global sign must equal the
/// sign of the matching Leibniz term both by the cycle formula and by
/// reading the matrix entries.
pub fn verify_sign_coherence(n: usize, variant: Variant) -> Result<SignReport> {
    check_size(n, 0)?;
    let m = build_matrix(n, variant);
    let global = global_sign(n, variant);
    let [t] = over_diagrams::<1>(n, |d, idx, t| {
        let expected = &global * &GaussianInteger::sign(crossing_number(d));
        let term = diagram_to_term(d, variant);
        let formula = sign_of_term(&term, variant);
        let direct = direct_term_coefficient(&m, &term);
        t[0].record(formula == expected && direct == expected, idx);
    });
    Ok(SignReport {
        n,
        variant,
        checked: t.instances,
        holds: t.failures == 0,
        first_failure: t.first_failure.map(|i| diagram_at(n, i).to_json()),
    })
}

pub type SignedTerms = Vec<(GaussianInteger, Monomial)>;

/// Sorted `(coefficient, monomial)` pairs of the surviving Leibniz products
/// and of the signed diagram weights; the bijection says they coincide.
pub fn stream_and_diagram_multisets(
    n: usize,
    variant: Variant,
) -> Result<(SignedTerms, SignedTerms)> {
    check_size(n, 0)?;
    let mut stream: Vec<_> = leibniz_term_stream(&build_matrix(n, variant))?
        .filter(|t| t.survives())
        .map(|t| (t.coefficient, t.monomial))
        .collect();
    let global = global_sign(n, variant);
    let mut diagrams: Vec<_> = (0..matching_count(n))
        .map(|i| {
            let d = diagram_at(n, i);
            (
                &global * &GaussianInteger::sign(crossing_number(&d)),
                crate::diagrams::weight(&d, variant),
            )
        })
        .collect();
    stream.sort();
    diagrams.sort();
    Ok((stream, diagrams))
}

/// First monomial where `det(M_B)` is not `(-1)^(b-degree / 2)` times
/// `det(M_F)`.
pub fn forward_backward_mismatch(f: &Polynomial, b: &Polynomial) -> Option<Monomial> {
    let rotated = Polynomial::from_terms(f.terms().map(|(m, c)| {
        let half = m.degree_in(VarKind::B) as usize / 2;
        (m.clone(), c * &GaussianInteger::sign(half))
    }));
    rotated.first_difference(b).map(|(m, _, _)| m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_small() {
        let r = verify_theorem(3, Variant::F).unwrap();
        assert!(r.holds);
        assert_eq!(r.diagrams, 15);
        assert_eq!(r.leibniz_products, 29);
        assert_eq!(r.surviving_terms, 15);
        assert_eq!(r.distinct_monomials, 11);
        assert!(verify_theorem(0, Variant::F).is_err());
        assert!(verify_theorem(9, Variant::F).is_err());
    }

    #[test]
    fn lemmas_small() {
        let r = verify_lemmas(4).unwrap();
        assert!(r.holds(), "{r:#?}");
        assert!(r.checks.iter().all(|c| c.instances > 0));
    }

    #[test]
    fn bijection_small() {
        let r = verify_bijection(4).unwrap();
        assert!(r.holds);
        assert_eq!(r.diagrams_checked, 2 * 105);
        assert_eq!(r.terms_checked, 2 * 105);
    }

    #[test]
    fn signs_small() {
        for v in Variant::ALL {
            assert!(verify_sign_coherence(4, v).unwrap().holds);
        }
    }

    #[test]
    fn tally_keeps_earliest_failure() {
        let mut a = Tally::default();
        a.record(false, 7);
        let mut b = Tally::default();
        b.record(true, 1);
        b.record(false, 3);
        let m = a.merge(b);
        assert_eq!(m.first_failure, Some(3));
        assert_eq!((m.instances, m.failures), (3, 2));
    }
}
