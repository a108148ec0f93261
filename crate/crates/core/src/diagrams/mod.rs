//! Brauer diagrams of size `n`: perfect matchings on `2n` points arranged in
//! a top row and a bottom row of `n` points each.
//!
//! Diagrams are stored positionally. Position `c` (`0 <= c < n`) is column
//! `c` of the top row and position `n + c` is column `c` of the bottom row.
//! Labels only enter through [`edge_list`] and [`weight`]: the top row is
//! always labelled `1..=n` left to right, the bottom row left to right for
//! [`Variant::F`] and right to left for [`Variant::B`].

mod enumerate;
mod svg;

pub use enumerate::{
    diagram_at, diagram_index, enumerate_diagrams, matching_at, matching_count, matching_index,
    Diagrams, Matchings,
};
pub use svg::render_svg;

use serde::{Deserialize, Serialize};

use crate::algebra::{IndexedVar, Monomial};
use crate::{Error, Result, Variant};

/// Label scheme of a diagram; see the module docs.
pub type Labeling = Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Row {
    Top,
    Bottom,
}

impl Row {
    pub fn other(self) -> Row {
        match self {
            Row::Top => Row::Bottom,
            Row::Bottom => Row::Top,
        }
    }
}

/// An edge in column coordinates (0-based within its row).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    /// Both endpoints in the top row, `left < right`.
    Cup(usize, usize),
    /// Both endpoints in the bottom row, `left < right`.
    Cap(usize, usize),
    Arc {
        top: usize,
        bottom: usize,
    },
}

impl Edge {
    /// Whether the two edges intersect in the canonical drawing.
    pub fn crosses(&self, other: &Edge) -> bool {
        use Edge::*;
        match (*self, *other) {
            (
                Arc {
                    top: t1,
                    bottom: b1,
                },
                Arc {
                    top: t2,
                    bottom: b2,
                },
            ) => (t1 < t2) != (b1 < b2),
            (Cup(u1, u2), Cup(u3, u4)) | (Cap(u1, u2), Cap(u3, u4)) => interleaved(u1, u2, u3, u4),
            (Cup(..), Cap(..)) | (Cap(..), Cup(..)) => false,
            (Arc { top, .. }, Cup(u1, u2)) | (Cup(u1, u2), Arc { top, .. }) => u1 < top && top < u2,
            (Arc { bottom, .. }, Cap(c1, c2)) | (Cap(c1, c2), Arc { bottom, .. }) => {
                c1 < bottom && bottom < c2
            }
        }
    }
}

/// Chords `(u1, u2)` and `(u3, u4)` on a line, each sorted, alternate.
pub fn interleaved(u1: usize, u2: usize, u3: usize, u4: usize) -> bool {
    (u1 < u3 && u3 < u2 && u2 < u4) || (u3 < u1 && u1 < u4 && u4 < u2)
}

/// A fixed-point-free involution on the `2n` positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    partner: Vec<usize>,
}

impl BrauerDiagram {
    /// Validates that `partner` is a fixed-point-free involution on `0..2n`.
    pub fn new(n: usize, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != 2 * n {
            return Err(Error::InvalidDiagram(format!(
                "expected {} positions, got {}",
                2 * n,
                partner.len()
            )));
        }
        for (v, &w) in partner.iter().enumerate() {
            if w >= 2 * n {
                return Err(Error::InvalidDiagram(format!("position {w} out of range")));
            }
            if w == v {
                return Err(Error::InvalidDiagram(format!(
                    "position {v} matched to itself"
                )));
            }
            if partner[w] != v {
                return Err(Error::InvalidDiagram(format!(
                    "position {v} -> {w} but {w} -> {}",
                    partner[w]
                )));
            }
        }
        Ok(BrauerDiagram { n, partner })
    }

    pub(crate) fn from_partner_unchecked(n: usize, partner: Vec<usize>) -> Self {
        debug_assert!(BrauerDiagram::new(n, partner.clone()).is_ok());
        BrauerDiagram { n, partner }
    }

    /// Builds a diagram from a list of position pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; 2 * n];
        for &(v, w) in pairs {
            for p in [v, w] {
                if p >= 2 * n {
                    return Err(Error::InvalidDiagram(format!("position {p} out of range")));
                }
                if partner[p] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("position {p} used twice")));
                }
            }
            partner[v] = w;
            partner[w] = v;
        }
        if let Some(v) = partner.iter().position(|&w| w == usize::MAX) {
            return Err(Error::InvalidDiagram(format!("position {v} unmatched")));
        }
        BrauerDiagram::new(n, partner)
    }

    /// Builds a diagram from edges in column coordinates.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|e| match *e {
                Edge::Cup(u, v) => (u, v),
                Edge::Cap(u, v) => (n + u, n + v),
                Edge::Arc { top, bottom } => (top, n + bottom),
            })
            .collect();
        BrauerDiagram::from_pairs(n, &pairs)
    }

    /// All arcs vertical: column `c` on top to column `c` at the bottom.
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|v| (v + n) % (2 * n)).collect();
        BrauerDiagram { n, partner }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, pos: usize) -> usize {
        self.partner[pos]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    pub fn row_of(&self, pos: usize) -> Row {
        if pos < self.n {
            Row::Top
        } else {
            Row::Bottom
        }
    }

    pub fn position(&self, row: Row, col: usize) -> usize {
        match row {
            Row::Top => col,
            Row::Bottom => self.n + col,
        }
    }

    fn col(&self, pos: usize) -> usize {
        pos % self.n
    }

    /// Each edge once, ordered by its smaller position.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.n;
        (0..2 * n)
            .filter(|&v| v < self.partner[v])
            .map(|v| {
                let w = self.partner[v];
                match (v < n, w < n) {
                    (true, true) => Edge::Cup(v, w),
                    (false, false) => Edge::Cap(v - n, w - n),
                    _ => Edge::Arc {
                        top: v,
                        bottom: w - n,
                    },
                }
            })
            .collect()
    }

    pub fn cup_count(&self) -> usize {
        (0..self.n)
            .filter(|&v| self.partner[v] < self.n && v < self.partner[v])
            .count()
    }

    pub fn cap_count(&self) -> usize {
        (self.n..2 * self.n)
            .filter(|&v| self.partner[v] >= self.n && v < self.partner[v])
            .count()
    }

    pub fn arc_count(&self) -> usize {
        (0..self.n).filter(|&v| self.partner[v] >= self.n).count()
    }

    /// Mirror image through the horizontal axis: top and bottom rows
    /// exchanged, columns kept. Crossing numbers are unchanged.
    pub fn reflect(&self) -> BrauerDiagram {
        let n = self.n;
        let flip = |p: usize| (p + n) % (2 * n);
        let mut partner = vec![0; 2 * n];
        for v in 0..2 * n {
            partner[flip(v)] = flip(self.partner[v]);
        }
        BrauerDiagram { n, partner }
    }

    /// The diagram whose cups are this one's caps and vice versa, with every
    /// arc `(t, b)` turned into `(b, t)`, all in terms of labels under `lab`.
    pub fn swap_rows(&self, lab: Labeling) -> BrauerDiagram {
        BrauerDiagram::from_edge_list(self.n, &edge_list(self, lab).swapped(), lab)
            .expect("swapping rows of a valid diagram is valid")
    }

    /// Inverse of [`edge_list`].
    pub fn from_edge_list(n: usize, list: &EdgeList, lab: Labeling) -> Result<Self> {
        let check = |l: u32| {
            if l == 0 || l as usize > n {
                Err(Error::InvalidDiagram(format!(
                    "label {l} out of range 1..={n}"
                )))
            } else {
                Ok(l)
            }
        };
        let mut pairs = Vec::with_capacity(n);
        for &(i, j) in &list.cups {
            pairs.push(((check(i)? - 1) as usize, (check(j)? - 1) as usize));
        }
        for &(i, j) in &list.caps {
            pairs.push((
                n + bottom_col(n, check(i)?, lab),
                n + bottom_col(n, check(j)?, lab),
            ));
        }
        for &(t, b) in &list.arcs {
            pairs.push(((check(t)? - 1) as usize, n + bottom_col(n, check(b)?, lab)));
        }
        BrauerDiagram::from_pairs(n, &pairs)
    }

    /// Label of position `pos` under `lab`.
    pub fn label(&self, pos: usize, lab: Labeling) -> u32 {
        let c = self.col(pos);
        match (self.row_of(pos), lab) {
            (Row::Top, _) | (Row::Bottom, Variant::F) => c as u32 + 1,
            (Row::Bottom, Variant::B) => (self.n - c) as u32,
        }
    }

    /// Position carrying `label` in `row` under `lab`.
    pub fn position_of_label(&self, row: Row, label: u32, lab: Labeling) -> usize {
        match row {
            Row::Top => label as usize - 1,
            Row::Bottom => self.n + bottom_col(self.n, label, lab),
        }
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            n: self.n,
            edges: (0..2 * self.n)
                .filter(|&v| v < self.partner[v])
                .map(|v| [v + 1, self.partner[v] + 1])
                .collect(),
        }
    }

    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        let mut pairs = Vec::with_capacity(json.edges.len());
        for &[v, w] in &json.edges {
            if v == 0 || w == 0 {
                return Err(Error::InvalidDiagram("positions are 1-based".into()));
            }
            pairs.push((v - 1, w - 1));
        }
        BrauerDiagram::from_pairs(json.n, &pairs)
    }
}

fn bottom_col(n: usize, label: u32, lab: Labeling) -> usize {
    match lab {
        Variant::F => label as usize - 1,
        Variant::B => n - label as usize,
    }
}

/// Serialized diagram: 1-based positions (top row `1..=n`, bottom row
/// `n+1..=2n`), each edge sorted, edges sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Number of pairwise intersections among the edges of `d`.
pub fn crossing_number(d: &BrauerDiagram) -> usize {
    let edges = d.edges();
    let mut count = 0;
    for (k, e) in edges.iter().enumerate() {
        count += edges[k + 1..].iter().filter(|f| e.crosses(f)).count();
    }
    count
}

/// Edges of a diagram in label coordinates.
///
/// Cups and caps are written `(i, j)` with `i < j`, arcs as
/// `(top label, bottom label)`; each list is sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeList {
    pub cups: Vec<(u32, u32)>,
    pub caps: Vec<(u32, u32)>,
    pub arcs: Vec<(u32, u32)>,
}

impl EdgeList {
    /// Cups become caps, caps become cups and arcs are read bottom-first.
    pub fn swapped(&self) -> EdgeList {
        let mut arcs: Vec<(u32, u32)> = self.arcs.iter().map(|&(t, b)| (b, t)).collect();
        arcs.sort_unstable();
        EdgeList {
            cups: self.caps.clone(),
            caps: self.cups.clone(),
            arcs,
        }
    }
}

pub fn edge_list(d: &BrauerDiagram, lab: Labeling) -> EdgeList {
    let sorted = |x: u32, y: u32| (x.min(y), x.max(y));
    let mut out = EdgeList::default();
    for e in d.edges() {
        match e {
            Edge::Cup(u, v) => out.cups.push(sorted(d.label(u, lab), d.label(v, lab))),
            Edge::Cap(u, v) => out
                .caps
                .push(sorted(d.label(d.n + u, lab), d.label(d.n + v, lab))),
            Edge::Arc { top, bottom } => out
                .arcs
                .push((d.label(top, lab), d.label(d.n + bottom, lab))),
        }
    }
    out.cups.sort_unstable();
    out.caps.sort_unstable();
    out.arcs.sort_unstable();
    out
}

/// Product of `b[i,j]` over cups and caps and `a[min,max]` over arcs, in
/// labels under `lab`.
pub fn weight(d: &BrauerDiagram, lab: Labeling) -> Monomial {
    let list = edge_list(d, lab);
    let vars = list
        .cups
        .iter()
        .chain(&list.caps)
        .map(|&(i, j)| IndexedVar::b_hat(i, j))
        .chain(list.arcs.iter().map(|&(t, b)| IndexedVar::a_hat(t, b)));
    Monomial::from_vars(vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The size-7 example diagram, in (top column, bottom column) terms,
    /// 1-based as drawn.
    fn seven() -> BrauerDiagram {
        let e = |u: usize, v: usize| (u - 1, v - 1);
        BrauerDiagram::from_edges(
            7,
            &[
                Edge::Cup(e(2, 4).0, e(2, 4).1),
                Edge::Cup(e(3, 7).0, e(3, 7).1),
                Edge::Cap(e(1, 6).0, e(1, 6).1),
                Edge::Cap(e(4, 5).0, e(4, 5).1),
                Edge::Arc { top: 5, bottom: 1 },
                Edge::Arc { top: 0, bottom: 2 },
                Edge::Arc { top: 4, bottom: 6 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn seven_crossings() {
        assert_eq!(crossing_number(&seven()), 7);
        assert_eq!(crossing_number(&seven().reflect()), 7);
    }

    #[test]
    fn identity_is_planar() {
        for n in 0..6 {
            assert_eq!(crossing_number(&BrauerDiagram::identity(n)), 0);
        }
    }

    #[test]
    fn rejects_bad_partner_arrays() {
        assert!(BrauerDiagram::new(1, vec![0, 1]).is_err());
        assert!(BrauerDiagram::new(2, vec![1, 2, 3, 0]).is_err());
        assert!(BrauerDiagram::new(2, vec![1, 0, 3]).is_err());
        assert!(BrauerDiagram::new(1, vec![1, 0]).is_ok());
        assert!(BrauerDiagram::from_pairs(2, &[(0, 1), (1, 2)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn identity_edge_lists() {
        let d = BrauerDiagram::identity(4);
        let f = edge_list(&d, Variant::F);
        assert_eq!(f.arcs, vec![(1, 1), (2, 2), (3, 3), (4, 4)]);
        assert!(f.cups.is_empty() && f.caps.is_empty());
        let b = edge_list(&d, Variant::B);
        assert_eq!(b.arcs, vec![(1, 4), (2, 3), (3, 2), (4, 1)]);
        assert_eq!(
            weight(&d, Variant::F).to_string(),
            "a[1,1]*a[2,2]*a[3,3]*a[4,4]"
        );
    }

    #[test]
    fn backward_labels_reverse_bottom_row() {
        let d = seven();
        let f = edge_list(&d, Variant::F);
        assert_eq!(f.cups, vec![(2, 4), (3, 7)]);
        assert_eq!(f.caps, vec![(1, 6), (4, 5)]);
        assert_eq!(f.arcs, vec![(1, 3), (5, 7), (6, 2)]);
        let b = edge_list(&d, Variant::B);
        assert_eq!(b.cups, vec![(2, 4), (3, 7)]);
        assert_eq!(b.caps, vec![(2, 7), (3, 4)]);
        assert_eq!(b.arcs, vec![(1, 5), (5, 1), (6, 6)]);
        for lab in Variant::ALL {
            let list = edge_list(&d, lab);
            assert_eq!(BrauerDiagram::from_edge_list(7, &list, lab).unwrap(), d);
        }
    }

    #[test]
    fn edge_classification_is_balanced() {
        for d in enumerate_diagrams(4) {
            assert_eq!(d.cup_count(), d.cap_count());
            assert_eq!(d.cup_count() * 2 + d.arc_count(), 4);
            assert_eq!(d.edges().len(), 4);
        }
    }

    #[test]
    fn json_roundtrip() {
        let d = seven();
        let json = d.to_json();
        assert_eq!(json.edges[0], [1, 10]);
        let text = serde_json::to_string(&json).unwrap();
        let back: DiagramJson = serde_json::from_str(&text).unwrap();
        assert_eq!(BrauerDiagram::from_json(&back).unwrap(), d);
        let bad = DiagramJson {
            n: 1,
            edges: vec![[0, 1]],
        };
        assert!(BrauerDiagram::from_json(&bad).is_err());
    }

    #[test]
    fn swap_rows_under_forward_labels_is_reflection() {
        for d in enumerate_diagrams(4) {
            assert_eq!(d.swap_rows(Variant::F), d.reflect());
            assert_eq!(d.swap_rows(Variant::B).swap_rows(Variant::B), d);
        }
    }
}
