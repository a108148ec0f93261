//! Perfect matchings in a fixed order.
//!
//! A matching of `2m` points is encoded by `m` choice digits: at level `k`
//! the smallest unmatched point is paired with the `c_k`-th larger unmatched
//! point, `0 <= c_k < 2(m - k) - 1`. Enumeration order is lexicographic in
//! the digits, so the position of a matching in the stream is its
//! mixed-radix value and can be computed directly in both directions.

use super::BrauerDiagram;

/// Number of perfect matchings of `2m` points, `(2m - 1)!!`.
pub fn matching_count(m: usize) -> u64 {
    (1..=m).map(|k| (2 * k - 1) as u64).product()
}

/// Partner array of the matching at `index` in enumeration order.
///
/// Panics if `index >= matching_count(m)`.
pub fn matching_at(m: usize, index: u64) -> Vec<usize> {
    assert!(index < matching_count(m), "matching index out of range");
    let mut digits = vec![0usize; m];
    let mut rest = index;
    for k in (0..m).rev() {
        let radix = (2 * (m - k) - 1) as u64;
        digits[k] = (rest % radix) as usize;
        rest /= radix;
    }
    decode(m, &digits)
}

/// Inverse of [`matching_at`].
pub fn matching_index(partner: &[usize]) -> u64 {
    let m = partner.len() / 2;
    let mut unmatched: Vec<usize> = (0..2 * m).collect();
    let mut index = 0u64;
    for k in 0..m {
        let first = unmatched.remove(0);
        let slot = unmatched
            .iter()
            .position(|&p| p == partner[first])
            .expect("partner array is not a perfect matching");
        unmatched.remove(slot);
        index = index * (2 * (m - k) - 1) as u64 + slot as u64;
    }
    index
}

fn decode(m: usize, digits: &[usize]) -> Vec<usize> {
    let mut partner = vec![0usize; 2 * m];
    let mut unmatched: Vec<usize> = (0..2 * m).collect();
    for &d in digits {
        let first = unmatched.remove(0);
        let other = unmatched.remove(d);
        partner[first] = other;
        partner[other] = first;
    }
    partner
}

/// Stream of all perfect matchings of `2m` points as partner arrays.
#[derive(Clone, Debug)]
pub struct Matchings {
    m: usize,
    digits: Vec<usize>,
    remaining: u64,
}

impl Matchings {
    pub fn new(m: usize) -> Self {
        Matchings {
            m,
            digits: vec![0; m],
            remaining: matching_count(m),
        }
    }
}

impl Iterator for Matchings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = decode(self.m, &self.digits);
        for k in (0..self.m).rev() {
            self.digits[k] += 1;
            if self.digits[k] < 2 * (self.m - k) - 1 {
                break;
            }
            self.digits[k] = 0;
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Matchings {}

/// Stream of every Brauer diagram of size `n`, `(2n - 1)!!` in total.
#[derive(Clone, Debug)]
pub struct Diagrams {
    n: usize,
    inner: Matchings,
}

impl Iterator for Diagrams {
    type Item = BrauerDiagram;

    fn next(&mut self) -> Option<BrauerDiagram> {
        let partner = self.inner.next()?;
        Some(BrauerDiagram::from_partner_unchecked(self.n, partner))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for Diagrams {}

/// All diagrams of size `n`, smallest unmatched position first.
pub fn enumerate_diagrams(n: usize) -> Diagrams {
    Diagrams {
        n,
        inner: Matchings::new(n),
    }
}

/// Diagram at `index` in the order of [`enumerate_diagrams`].
pub fn diagram_at(n: usize, index: u64) -> BrauerDiagram {
    BrauerDiagram::from_partner_unchecked(n, matching_at(n, index))
}

/// Position of `d` in the order of [`enumerate_diagrams`].
pub fn diagram_index(d: &BrauerDiagram) -> u64 {
    matching_index(d.partners())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_diagrams(0).count(), 1);
        assert_eq!(enumerate_diagrams(3).count(), 15);
        assert_eq!(enumerate_diagrams(5).count(), 945);
        assert_eq!(enumerate_diagrams(5).len(), 945);
    }

    #[test]
    fn first_and_last_for_two_points_per_row() {
        let all: Vec<Vec<usize>> = Matchings::new(2).collect();
        assert_eq!(
            all,
            vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]]
        );
    }

    #[test]
    fn index_roundtrip_and_distinct() {
        let all: Vec<BrauerDiagram> = enumerate_diagrams(4).collect();
        for (k, d) in all.iter().enumerate() {
            assert_eq!(diagram_index(d), k as u64);
            assert_eq!(&diagram_at(4, k as u64), d);
        }
        let mut sorted: Vec<_> = all.iter().map(|d| d.partners().to_vec()).collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 105);
    }
}
