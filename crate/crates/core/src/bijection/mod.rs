//! Bijection between labelled Brauer diagrams and the Leibniz terms that
//! survive cancellation, and the sign of such a term read off its cycles.
//!
//! A Leibniz term of `M_F` or `M_B` is a permutation `π` together with, for
//! every non-fixed `i`, a choice of the `a` or the `b` part of the entry
//! `M[i, π(i)]`. Terms with an odd number of `b` choices in some cycle
//! cancel against the term of the reversed cycle; the remaining ones are in
//! bijection with diagrams.

mod permutation;

pub use permutation::{factorial, Permutation, Permutations};

use serde::{Deserialize, Serialize};

use crate::algebra::{GaussianInteger, IndexedVar, Monomial};
use crate::diagrams::{BrauerDiagram, Labeling, Row};
use crate::{Error, Result, Variant};

/// Inversion number of `p`.
pub fn inversion_number(p: &Permutation) -> usize {
    p.inversion_number()
}

/// Which part of an entry a transition `i -> π(i)` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    A,
    B,
}

/// A permutation plus an `a`/`b` choice per transition.
///
/// `factors[i]` is the choice for the transition `i -> π(i)`; fixed points
/// always take `A` (the diagonal entry `a[i,i]`). The canonical cycle form
/// is the one of [`Permutation::cycles`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermDescriptor {
    perm: Permutation,
    factors: Vec<Factor>,
}

impl TermDescriptor {
    pub fn new(perm: Permutation, factors: Vec<Factor>) -> Result<Self> {
        if factors.len() != perm.len() {
            return Err(Error::InvalidTerm(format!(
                "{} factors for a permutation of {}",
                factors.len(),
                perm.len()
            )));
        }
        if let Some(i) = (0..perm.len()).find(|&i| perm.apply(i) == i && factors[i] == Factor::B) {
            return Err(Error::InvalidTerm(format!(
                "fixed point {} must take the diagonal a-factor",
                i + 1
            )));
        }
        Ok(TermDescriptor { perm, factors })
    }

    /// Every transition takes the `a` part.
    pub fn all_a(perm: Permutation) -> Self {
        let factors = vec![Factor::A; perm.len()];
        TermDescriptor { perm, factors }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> Factor {
        self.factors[i]
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.perm.cycles()
    }

    /// Number of `b` choices in each canonical cycle.
    pub fn b_counts(&self) -> Vec<usize> {
        self.cycles()
            .iter()
            .map(|c| c.iter().filter(|&&i| self.factors[i] == Factor::B).count())
            .collect()
    }

    /// Whether every cycle has an even number of `b` choices.
    pub fn is_surviving(&self) -> bool {
        self.b_counts().iter().all(|c| c % 2 == 0)
    }

    /// Product of the chosen indeterminates, indices sorted.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_vars((0..self.perm.len()).map(|i| {
            let (x, y) = (i as u32 + 1, self.perm.apply(i) as u32 + 1);
            match self.factors[i] {
                Factor::A => IndexedVar::a_hat(x, y),
                Factor::B => IndexedVar::b_hat(x, y),
            }
        }))
    }

    pub fn to_json(&self) -> TermJson {
        let cycles = self.cycles();
        let b_transitions = cycles
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| {
                c.iter()
                    .enumerate()
                    .filter(|&(_, &i)| self.factors[i] == Factor::B)
                    .map(move |(pi, _)| [ci, pi])
            })
            .collect();
        TermJson {
            cycles: cycles
                .into_iter()
                .map(|c| c.into_iter().map(|i| i + 1).collect())
                .collect(),
            b_transitions,
        }
    }

    /// Reads the JSON form. Cycles must list every element of `1..=n`
    /// exactly once, fixed points included.
    pub fn from_json(json: &TermJson) -> Result<Self> {
        let n: usize = json.cycles.iter().map(Vec::len).sum();
        let mut cycles = Vec::with_capacity(json.cycles.len());
        for c in &json.cycles {
            if c.is_empty() || c.contains(&0) {
                return Err(Error::InvalidTerm(
                    "cycles must be nonempty and 1-based".into(),
                ));
            }
            cycles.push(c.iter().map(|&x| x - 1).collect::<Vec<_>>());
        }
        let perm = Permutation::from_cycles(n, &cycles)?;
        let mut factors = vec![Factor::A; n];
        for &[ci, pi] in &json.b_transitions {
            let i = *cycles
                .get(ci)
                .and_then(|c| c.get(pi))
                .ok_or_else(|| Error::InvalidTerm(format!("no transition [{ci}, {pi}]")))?;
            factors[i] = Factor::B;
        }
        TermDescriptor::new(perm, factors)
    }
}

/// Serialized term: cycles as 1-based element lists, and the `b` choices as
/// `[cycle index, position in cycle]` pairs (0-based), where position `k`
/// names the transition from the `k`-th element to the next one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub cycles: Vec<Vec<usize>>,
    pub b_transitions: Vec<[usize; 2]>,
}

/// Walks the diagram from the smallest top label not yet visited, alternating
/// between following an edge and jumping to the same label in the other row,
/// until the walk lands on the starting label in the bottom row. Each edge
/// taken records one transition: arcs choose `a`, cups and caps choose `b`.
pub fn diagram_to_term(d: &BrauerDiagram, lab: Labeling) -> TermDescriptor {
    let n = d.n();
    let mut images = vec![usize::MAX; n];
    let mut factors = vec![Factor::A; n];
    for start in 0..n {
        if images[start] != usize::MAX {
            continue;
        }
        let (mut row, mut cur) = (Row::Top, start);
        loop {
            let from = d.position_of_label(row, cur as u32 + 1, lab);
            let to = d.partner(from);
            let to_row = d.row_of(to);
            let next = d.label(to, lab) as usize - 1;
            factors[cur] = if to_row == row { Factor::B } else { Factor::A };
            images[cur] = next;
            if to_row == Row::Bottom && next == start {
                break;
            }
            row = to_row.other();
            cur = next;
        }
    }
    let perm = Permutation::new(images).expect("walk visits every label once");
    TermDescriptor { perm, factors }
}

/// Rebuilds the diagram of a surviving term.
///
/// Each cycle starts in the top row. A transition `x -> y` choosing `a`
/// places `y` in the opposite row and draws an arc, choosing `b` places `y`
/// in the same row and draws a cup or cap; the walk then continues from `y`
/// in the other row. An even number of `b` choices per cycle brings the walk
/// back to the bottom copy of the first element.
pub fn term_to_diagram(t: &TermDescriptor, lab: Labeling) -> Result<BrauerDiagram> {
    let n = t.perm.len();
    let cycles = t.cycles();
    for (ci, c) in cycles.iter().enumerate() {
        let count = c.iter().filter(|&&i| t.factors[i] == Factor::B).count();
        if count % 2 == 1 {
            return Err(Error::OddBCycle { cycle: ci, count });
        }
    }
    let shell = BrauerDiagram::identity(n);
    let mut pairs = Vec::with_capacity(n);
    for c in &cycles {
        let mut row = Row::Top;
        for (k, &src) in c.iter().enumerate() {
            let dst = c[(k + 1) % c.len()];
            let dst_row = match t.factors[src] {
                Factor::A => row.other(),
                Factor::B => row,
            };
            pairs.push((
                shell.position_of_label(row, src as u32 + 1, lab),
                shell.position_of_label(dst_row, dst as u32 + 1, lab),
            ));
            row = dst_row.other();
        }
    }
    BrauerDiagram::from_pairs(n, &pairs)
}

/// Per-transition signs of each canonical cycle: `beta = +1` when the
/// transition goes up (`x < y`), `-1` when it goes down, and `gamma = i·beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSignature {
    pub beta: Vec<Vec<i8>>,
    pub gamma: Vec<Vec<GaussianInteger>>,
}

pub fn cycle_signature(p: &Permutation) -> CycleSignature {
    let cycles = p.cycles();
    let beta: Vec<Vec<i8>> = cycles
        .iter()
        .map(|c| {
            (0..c.len())
                .map(|k| if c[k] < c[(k + 1) % c.len()] { 1 } else { -1 })
                .collect()
        })
        .collect();
    let gamma = beta
        .iter()
        .map(|bs| {
            bs.iter()
                .map(|&b| GaussianInteger::new_small(0, b as i64))
                .collect()
        })
        .collect();
    CycleSignature { beta, gamma }
}

/// Sign of the term in the Leibniz expansion of `M_F` (product of `beta`
/// over `b` transitions) or `M_B` (product of `gamma`), times the sign of the
/// permutation. Fixed points contribute nothing.
pub fn sign_of_term(t: &TermDescriptor, variant: Variant) -> GaussianInteger {
    let sig = cycle_signature(&t.perm);
    let mut s = GaussianInteger::sign(t.perm.inversion_number());
    for (c, (bs, gs)) in t.cycles().iter().zip(sig.beta.iter().zip(&sig.gamma)) {
        for (k, &i) in c.iter().enumerate() {
            if c.len() == 1 || t.factors[i] != Factor::B {
                continue;
            }
            let unit = match variant {
                Variant::F => GaussianInteger::from(bs[k] as i64),
                Variant::B => gs[k].clone(),
            };
            s = &s * &unit;
        }
    }
    s
}

/// Every `a`/`b` choice assignment for `perm` with an even number of `b`
/// choices per cycle, in increasing order of the bitmask over non-fixed
/// elements.
pub fn surviving_terms(perm: &Permutation) -> Vec<TermDescriptor> {
    let n = perm.len();
    let moved: Vec<usize> = (0..n).filter(|&i| perm.apply(i) != i).collect();
    let cycles = perm.cycles();
    let mut out = Vec::with_capacity(1 << moved.len().saturating_sub(cycles.len()));
    for mask in 0u64..(1u64 << moved.len()) {
        let mut factors = vec![Factor::A; n];
        for (bit, &i) in moved.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                factors[i] = Factor::B;
            }
        }
        let t = TermDescriptor {
            perm: perm.clone(),
            factors,
        };
        if t.is_surviving() {
            out.push(t);
        }
    }
    out
}

/// All surviving terms of size `n`: permutations in lexicographic order,
/// then choices as in [`surviving_terms`].
pub fn enumerate_terms(n: usize) -> impl Iterator<Item = TermDescriptor> {
    Permutation::all(n).flat_map(|p| surviving_terms(&p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{enumerate_diagrams, weight, Edge};

    fn d4() -> BrauerDiagram {
        BrauerDiagram::from_edges(
            3,
            &[
                Edge::Cup(0, 1),
                Edge::Cap(1, 2),
                Edge::Arc { top: 2, bottom: 0 },
            ],
        )
        .unwrap()
    }

    fn cycle_123() -> TermDescriptor {
        let perm = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        TermDescriptor::new(perm, vec![Factor::B, Factor::B, Factor::A]).unwrap()
    }

    #[test]
    fn identity_diagram_is_diagonal_term() {
        for lab in Variant::ALL {
            let d = BrauerDiagram::identity(4);
            let d = if lab == Variant::F {
                d
            } else {
                // label-wise identity under backward labels
                BrauerDiagram::from_edges(
                    4,
                    &(0..4)
                        .map(|c| Edge::Arc {
                            top: c,
                            bottom: 3 - c,
                        })
                        .collect::<Vec<_>>(),
                )
                .unwrap()
            };
            let t = diagram_to_term(&d, lab);
            assert_eq!(t, TermDescriptor::all_a(Permutation::identity(4)));
            assert_eq!(t.monomial().to_string(), "a[1,1]*a[2,2]*a[3,3]*a[4,4]");
            assert_eq!(term_to_diagram(&t, lab).unwrap(), d);
        }
    }

    #[test]
    fn traces_three_cycle() {
        let t = diagram_to_term(&d4(), Variant::F);
        assert_eq!(t, cycle_123());
        assert_eq!(t.monomial().to_string(), "a[1,3]*b[1,2]*b[2,3]");
        assert_eq!(t.monomial(), weight(&d4(), Variant::F));
        assert_eq!(term_to_diagram(&cycle_123(), Variant::F).unwrap(), d4());
    }

    #[test]
    fn three_cycle_signs() {
        assert_eq!(sign_of_term(&cycle_123(), Variant::F), GaussianInteger::ONE);
        assert_eq!(
            sign_of_term(&cycle_123(), Variant::B),
            -GaussianInteger::ONE
        );
        let id = TermDescriptor::all_a(Permutation::identity(5));
        for v in Variant::ALL {
            assert_eq!(sign_of_term(&id, v), GaussianInteger::ONE);
        }
    }

    #[test]
    fn odd_b_cycle_is_rejected() {
        let perm = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let t = TermDescriptor::new(perm, vec![Factor::B, Factor::A, Factor::A]).unwrap();
        assert!(!t.is_surviving());
        assert!(matches!(
            term_to_diagram(&t, Variant::F),
            Err(Error::OddBCycle { cycle: 0, count: 1 })
        ));
    }

    #[test]
    fn fixed_points_take_a() {
        let perm = Permutation::identity(2);
        assert!(TermDescriptor::new(perm, vec![Factor::A, Factor::B]).is_err());
    }

    #[test]
    fn json_form() {
        let t = cycle_123();
        let json = t.to_json();
        assert_eq!(json.cycles, vec![vec![1, 2, 3]]);
        assert_eq!(json.b_transitions, vec![[0, 0], [0, 1]]);
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"cycles":[[1,2,3]],"b_transitions":[[0,0],[0,1]]}"#
        );
        assert_eq!(TermDescriptor::from_json(&json).unwrap(), t);
        let bad = TermJson {
            cycles: vec![vec![1, 2]],
            b_transitions: vec![[0, 5]],
        };
        assert!(TermDescriptor::from_json(&bad).is_err());
    }

    #[test]
    fn roundtrip_small_sizes() {
        for n in 0..=4 {
            for lab in Variant::ALL {
                for d in enumerate_diagrams(n) {
                    let t = diagram_to_term(&d, lab);
                    assert!(t.is_surviving());
                    assert_eq!(t.monomial(), weight(&d, lab));
                    assert_eq!(term_to_diagram(&t, lab).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn swapping_rows_inverts_the_permutation() {
        for lab in Variant::ALL {
            for d in enumerate_diagrams(4) {
                let p = diagram_to_term(&d, lab).perm().clone();
                let q = diagram_to_term(&d.swap_rows(lab), lab).perm().clone();
                assert_eq!(q, p.inverse());
            }
        }
    }

    #[test]
    fn signature_of_three_cycle() {
        let p = Permutation::from_one_based(&[3, 1, 2]).unwrap();
        // (1 3 2): 1->3 up, 3->2 down, 2->1 down
        let sig = cycle_signature(&p);
        assert_eq!(sig.beta, vec![vec![1, -1, -1]]);
        assert_eq!(sig.gamma[0][1], GaussianInteger::new_small(0, -1));
    }
}
