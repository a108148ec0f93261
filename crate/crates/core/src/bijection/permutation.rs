use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A permutation of `{0, .., n-1}` in one-line form (`images[i]` is the
/// image of `i`).
///
/// Displayed and parsed 1-based in one-line notation, e.g. `3641725`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("images are 1-based".into()));
        }
        Permutation::new(images.iter().map(|&x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// `i -> n-1-i`.
    pub fn reversal(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`.
    pub fn inversion_number(&self) -> usize {
        let p = &self.images;
        (0..p.len())
            .map(|i| p[i + 1..].iter().filter(|&&y| y < p[i]).count())
            .sum()
    }

    /// Cycle decomposition with each cycle starting at its smallest element
    /// and cycles ordered by that element. Fixed points are included as
    /// one-element cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Builds a permutation of size `n` from disjoint cycles; elements not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint on 0..{n}"
                    )));
                }
                images[x] = c[(k + 1) % c.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Permutation at `index` in lexicographic order of one-line forms.
    pub fn nth(n: usize, index: u64) -> Permutation {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut fact: u64 = (1..n as u64).product();
        let mut rest = index;
        let mut images = Vec::with_capacity(n);
        for k in (0..n).rev() {
            let d = (rest / fact) as usize;
            rest %= fact;
            images.push(pool.remove(d));
            if k > 0 {
                fact /= k as u64;
            }
        }
        Permutation { images }
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some(Permutation::identity(n)),
        }
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic stream of permutations.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Permutation>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut p = current.images.clone();
        // standard next-permutation step
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(Permutation { images: p });
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.len() <= 9;
        for (k, &x) in self.images.iter().enumerate() {
            if k > 0 && !compact {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3641725` (single digits) or whitespace/comma separated
    /// 1-based images.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad permutation `{s}`"));
        let images: Vec<usize> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_one_based(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_line_example_has_ten_inversions() {
        let p: Permutation = "3641725".parse().unwrap();
        assert_eq!(p.inversion_number(), 10);
        assert_eq!(p.to_string(), "3641725");
    }

    #[test]
    fn extremes() {
        assert_eq!(Permutation::identity(7).inversion_number(), 0);
        assert_eq!(Permutation::reversal(7).inversion_number(), 21);
    }

    #[test]
    fn canonical_cycles() {
        let p: Permutation = "3641725".parse().unwrap();
        // 1->3->4->1, 2->6->2, 5->7->5
        assert_eq!(p.cycles(), vec![vec![0, 2, 3], vec![1, 5], vec![4, 6]]);
        assert_eq!(Permutation::from_cycles(7, &p.cycles()).unwrap(), p);
        assert_eq!(p.inverse().inverse(), p);
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn lexicographic_stream_matches_nth() {
        let all: Vec<Permutation> = Permutation::all(4).collect();
        assert_eq!(all.len(), 24);
        for (k, p) in all.iter().enumerate() {
            assert_eq!(&Permutation::nth(4, k as u64), p);
        }
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!("1204".parse::<Permutation>().is_err());
    }
}
