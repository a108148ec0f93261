use crate::algebra::{GaussianInteger, IndexedVar, Monomial, VarKind};
use crate::bijection::{Factor, Permutation, Permutations, TermDescriptor};
use crate::{Error, Result};

use super::SymbolicMatrix;

/// One product in the Leibniz expansion before any cancellation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub term: TermDescriptor,
    /// Permutation sign times the coefficients of the chosen parts.
    pub coefficient: GaussianInteger,
    pub monomial: Monomial,
}

impl ExpansionTerm {
    pub fn survives(&self) -> bool {
        self.term.is_surviving()
    }
}

#[derive(Clone, Debug)]
struct Part {
    var: IndexedVar,
    coeff: GaussianInteger,
}

/// The `a` part and (off the diagonal) the `b` part of one entry.
#[derive(Clone, Debug)]
struct EntryParts {
    a: Part,
    b: Option<Part>,
}

fn split_entry(m: &SymbolicMatrix, row: usize, col: usize) -> Result<EntryParts> {
    let mut a = None;
    let mut b = None;
    let bad = || Error::NotExpandable { row, col };
    for (mono, c) in m.entry(row, col).terms() {
        let mut factors = mono.factors();
        let (var, e) = factors.next().ok_or_else(bad)?;
        if e != 1 || factors.next().is_some() {
            return Err(bad());
        }
        let (i, j) = var.indices();
        let expected = (row.min(col) as u32 + 1, row.max(col) as u32 + 1);
        if (i, j) != expected {
            return Err(bad());
        }
        let part = Part {
            var,
            coeff: c.clone(),
        };
        match var.kind() {
            VarKind::A => a = Some(part),
            VarKind::B => b = Some(part),
        }
    }
    let a = a.ok_or_else(bad)?;
    if row != col && b.is_none() {
        return Err(bad());
    }
    Ok(EntryParts { a, b })
}

/// Lazy stream of every Leibniz product of an `M_F`/`M_B`-shaped matrix.
///
/// Permutations come in lexicographic order; for each, the `a`/`b` choices
/// run over the bitmask of non-fixed rows (bit `k` set means the `k`-th
/// non-fixed row takes `b`). Every entry must be `α·a[i,j]` on the diagonal
/// and `α·a[î,ĵ] + β·b[î,ĵ]` off it.
pub fn leibniz_term_stream(m: &SymbolicMatrix) -> Result<TermStream> {
    let n = m.n();
    let mut parts = Vec::with_capacity(n * n);
    for row in 0..n {
        for col in 0..n {
            parts.push(split_entry(m, row, col)?);
        }
    }
    Ok(TermStream {
        n,
        parts,
        perms: Permutation::all(n),
        current: None,
    })
}

pub struct TermStream {
    n: usize,
    parts: Vec<EntryParts>,
    perms: Permutations,
    current: Option<Cursor>,
}

struct Cursor {
    perm: Permutation,
    sign: GaussianInteger,
    moved: Vec<usize>,
    mask: u64,
}

impl Iterator for TermStream {
    type Item = ExpansionTerm;

    fn next(&mut self) -> Option<ExpansionTerm> {
        loop {
            if let Some(cur) = &mut self.current {
                if cur.mask < 1u64 << cur.moved.len() {
                    let mask = cur.mask;
                    cur.mask += 1;
                    let mut factors = vec![Factor::A; self.n];
                    for (bit, &i) in cur.moved.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            factors[i] = Factor::B;
                        }
                    }
                    let mut coefficient = cur.sign.clone();
                    let mut vars = Vec::with_capacity(self.n);
                    for (i, f) in factors.iter().enumerate() {
                        let entry = &self.parts[i * self.n + cur.perm.apply(i)];
                        let part = match f {
                            Factor::A => &entry.a,
                            Factor::B => entry.b.as_ref().expect("off-diagonal entry has b part"),
                        };
                        coefficient = &coefficient * &part.coeff;
                        vars.push(part.var);
                    }
                    let term = TermDescriptor::new(cur.perm.clone(), factors)
                        .expect("fixed points always take a");
                    return Some(ExpansionTerm {
                        term,
                        coefficient,
                        monomial: Monomial::from_vars(vars),
                    });
                }
            }
            let perm = self.perms.next()?;
            let moved = (0..self.n).filter(|&i| perm.apply(i) != i).collect();
            self.current = Some(Cursor {
                sign: GaussianInteger::sign(perm.inversion_number()),
                perm,
                moved,
                mask: 0,
            });
        }
    }
}
