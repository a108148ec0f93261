use std::fmt;

use smallvec::SmallVec;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    /// Symmetric-part indeterminate `a[i,j]`, `i <= j`.
    A,
    /// Skew-part indeterminate `b[i,j]`, `i < j`.
    B,
}

impl VarKind {
    fn letter(self) -> char {
        match self {
            VarKind::A => 'a',
            VarKind::B => 'b',
        }
    }
}

/// One of the indeterminates `a[i,j]` or `b[i,j]`, indices 1-based.
///
/// Ordered by kind (`a` before `b`), then lexicographically by `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexedVar {
    kind: VarKind,
    i: u16,
    j: u16,
}

fn narrow(x: u32) -> u16 {
    u16::try_from(x).expect("index fits in 16 bits")
}

impl IndexedVar {
    pub fn new(kind: VarKind, i: u32, j: u32) -> Result<Self> {
        let bad = |reason| Error::InvalidVariable {
            kind: kind.letter(),
            i,
            j,
            reason,
        };
        if i == 0 || j == 0 {
            return Err(bad("indices are 1-based"));
        }
        if i > u16::MAX as u32 || j > u16::MAX as u32 {
            return Err(bad("indices are at most 65535"));
        }
        match kind {
            VarKind::A if i > j => Err(bad("a[i,j] requires i <= j")),
            VarKind::B if i >= j => Err(bad("b[i,j] requires i < j")),
            _ => Ok(IndexedVar {
                kind,
                i: narrow(i),
                j: narrow(j),
            }),
        }
    }

    pub fn a(i: u32, j: u32) -> Result<Self> {
        IndexedVar::new(VarKind::A, i, j)
    }

    pub fn b(i: u32, j: u32) -> Result<Self> {
        IndexedVar::new(VarKind::B, i, j)
    }

    /// `a` indexed by the sorted pair `(min, max)`.
    pub fn a_hat(x: u32, y: u32) -> Self {
        IndexedVar {
            kind: VarKind::A,
            i: narrow(x.min(y)),
            j: narrow(x.max(y)),
        }
    }

    /// `b` indexed by the sorted pair; panics if `x == y`.
    pub fn b_hat(x: u32, y: u32) -> Self {
        assert_ne!(x, y, "b is only defined off the diagonal");
        IndexedVar {
            kind: VarKind::B,
            i: narrow(x.min(y)),
            j: narrow(x.max(y)),
        }
    }

    pub fn kind(&self) -> VarKind {
        self.kind
    }

    pub fn indices(&self) -> (u32, u32) {
        (self.i as u32, self.j as u32)
    }
}

impl fmt::Display for IndexedVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind.letter(), self.i, self.j)
    }
}

/// Exponents are stored in 16 bits to keep monomials small; building one
/// with a larger exponent panics.
type Factors = SmallVec<[(IndexedVar, u16); 8]>;

fn narrow_exp(e: u32) -> u16 {
    u16::try_from(e).expect("exponent fits in 16 bits")
}

fn add_exp(e: u16, f: u16) -> u16 {
    e.checked_add(f).expect("exponent fits in 16 bits")
}

/// A product of indeterminates with positive exponents.
///
/// Stored as a list of `(variable, exponent)` pairs sorted by variable, so
/// the derived ordering compares monomials factor by factor.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Factors,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: IndexedVar) -> Self {
        Monomial::pow(v, 1)
    }

    pub fn pow(v: IndexedVar, e: u32) -> Self {
        let mut factors = Factors::new();
        if e > 0 {
            factors.push((v, narrow_exp(e)));
        }
        Monomial { factors }
    }

    /// Builds a monomial from an unsorted bag of variables with exponents.
    pub fn from_factors(items: impl IntoIterator<Item = (IndexedVar, u32)>) -> Self {
        let mut raw: Factors = items
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| (v, narrow_exp(e)))
            .collect();
        raw.sort_unstable_by_key(|&(v, _)| v);
        let mut factors = Factors::new();
        for (v, e) in raw {
            match factors.last_mut() {
                Some((last, acc)) if *last == v => *acc = add_exp(*acc, e),
                _ => factors.push((v, e)),
            }
        }
        Monomial { factors }
    }

    /// Product of the given variables, each counted once per occurrence.
    pub fn from_vars(vars: impl IntoIterator<Item = IndexedVar>) -> Self {
        Monomial::from_factors(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> impl Iterator<Item = (IndexedVar, u32)> + '_ {
        self.factors.iter().map(|&(v, e)| (v, e as u32))
    }

    pub fn exponent(&self, v: IndexedVar) -> u32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|k| self.factors[k].1 as u32)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn degree_in(&self, kind: VarKind) -> u32 {
        self.factors
            .iter()
            .filter(|(v, _)| v.kind == kind)
            .map(|&(_, e)| e as u32)
            .sum()
    }

    pub fn contains(&self, pred: impl Fn(&IndexedVar) -> bool) -> bool {
        self.factors.iter().any(|(v, _)| pred(v))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Factors::with_capacity(self.factors.len() + other.factors.len());
        let (mut x, mut y) = (
            self.factors.iter().peekable(),
            other.factors.iter().peekable(),
        );
        loop {
            match (x.peek(), y.peek()) {
                (Some(&&(u, e)), Some(&&(v, f))) => {
                    if u < v {
                        factors.push((u, e));
                        x.next();
                    } else if v < u {
                        factors.push((v, f));
                        y.next();
                    } else {
                        factors.push((u, add_exp(e, f)));
                        x.next();
                        y.next();
                    }
                }
                (Some(_), None) => factors.extend(x.by_ref().copied()),
                (None, Some(_)) => factors.extend(y.by_ref().copied()),
                (None, None) => break,
            }
        }
        Monomial { factors }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_domain() {
        assert!(IndexedVar::a(2, 2).is_ok());
        assert!(IndexedVar::a(3, 2).is_err());
        assert!(IndexedVar::b(2, 2).is_err());
        assert!(IndexedVar::b(0, 2).is_err());
        assert!(IndexedVar::b(1, 2).is_ok());
    }

    #[test]
    fn variable_order() {
        let a23 = IndexedVar::a(2, 3).unwrap();
        let b12 = IndexedVar::b(1, 2).unwrap();
        let a13 = IndexedVar::a(1, 3).unwrap();
        assert!(a13 < a23);
        assert!(a23 < b12);
    }

    #[test]
    fn canonical_form() {
        let a13 = IndexedVar::a(1, 3).unwrap();
        let b12 = IndexedVar::b(1, 2).unwrap();
        let b23 = IndexedVar::b(2, 3).unwrap();
        let m = Monomial::from_vars([b23, a13, b12]);
        assert_eq!(m.to_string(), "a[1,3]*b[1,2]*b[2,3]");
        assert_eq!(m, Monomial::from_vars([b12, b23, a13]));
        let sq = m.mul(&Monomial::var(b12));
        assert_eq!(sq.to_string(), "a[1,3]*b[1,2]^2*b[2,3]");
        assert_eq!(sq.degree(), 4);
        assert_eq!(sq.degree_in(VarKind::B), 3);
        assert_eq!(sq.exponent(b12), 2);
        assert_eq!(Monomial::pow(b12, 0), Monomial::one());
    }
}
