//! Symbolic matrices `M_F = A + B` and `M_B = A + i·B`, their Leibniz
//! determinants and permanents, the diagram-sum determinant and Pfaffians.

mod stream;

pub use stream::{leibniz_term_stream, ExpansionTerm, TermStream};

use rayon::prelude::*;

use crate::algebra::{
    GaussianInteger, IndexedVar, Monomial, Polynomial, PolynomialAccumulator, VarKind,
};
use crate::bijection::{factorial, Permutation};
use crate::diagrams::{
    crossing_number, diagram_at, interleaved, matching_at, matching_count, weight, Labeling,
};
use crate::{pairs, Error, Result, Variant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    /// `None` for matrices not built by [`build_matrix`].
    variant: Option<Variant>,
    entries: Vec<Polynomial>,
}

impl SymbolicMatrix {
    /// Arbitrary entries, row-major.
    pub fn custom(n: usize, entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::SizeOutOfRange {
                n,
                reason: format!("{} entries for a {n}x{n} matrix", entries.len()),
            });
        }
        Ok(SymbolicMatrix {
            n,
            variant: None,
            entries,
        })
    }

    /// Matrix whose every entry is the constant `c`.
    pub fn constant(n: usize, c: i64) -> Self {
        SymbolicMatrix {
            n,
            variant: None,
            entries: vec![Polynomial::constant(c); n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Option<Variant> {
        self.variant
    }

    /// Entry at 0-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.n + col]
    }

    /// Substitutes zero for every variable matching `pred` in every entry.
    pub fn specialize(&self, pred: impl Fn(&IndexedVar) -> bool + Copy) -> SymbolicMatrix {
        SymbolicMatrix {
            n: self.n,
            variant: None,
            entries: self.entries.iter().map(|e| e.set_zero(pred)).collect(),
        }
    }
}

/// `M_F` or `M_B` of size `n`: diagonal `a[i,i]`; above the diagonal
/// `a[i,j] + c·b[i,j]`, below it `a[j,i] - c·b[j,i]`, with `c = 1` for `F` and
/// `c = i` for `B`.
pub fn build_matrix(n: usize, variant: Variant) -> SymbolicMatrix {
    let c = match variant {
        Variant::F => GaussianInteger::ONE,
        Variant::B => GaussianInteger::I,
    };
    let mut entries = Vec::with_capacity(n * n);
    for r in 1..=n as u32 {
        for s in 1..=n as u32 {
            let a = Polynomial::var(IndexedVar::a_hat(r, s));
            let e = if r == s {
                a
            } else {
                let b = Polynomial::term(c.clone(), Monomial::var(IndexedVar::b_hat(r, s)));
                if r < s {
                    &a + &b
                } else {
                    &a - &b
                }
            };
            entries.push(e);
        }
    }
    SymbolicMatrix {
        n,
        variant: Some(variant),
        entries,
    }
}

/// The generic `n x n` antisymmetric matrix: `M_F` with every `a` set to 0.
pub fn antisymmetric_matrix(n: usize) -> SymbolicMatrix {
    build_matrix(n, Variant::F).specialize(|v| v.kind() == VarKind::A)
}

type EntryTerms = Vec<(Vec<(IndexedVar, u32)>, GaussianInteger)>;

fn entry_terms(m: &SymbolicMatrix) -> Vec<EntryTerms> {
    m.entries
        .iter()
        .map(|e| {
            e.terms()
                .map(|(mono, c)| (mono.factors().collect(), c.clone()))
                .collect()
        })
        .collect()
}

/// Multiplies out one permutation's entries depth-first.
fn expand_product(
    rows: &[&EntryTerms],
    vars: &mut Vec<(IndexedVar, u32)>,
    coeff: &GaussianInteger,
    acc: &mut PolynomialAccumulator,
) {
    let Some((first, rest)) = rows.split_first() else {
        acc.add_term(Monomial::from_factors(vars.iter().copied()), coeff);
        return;
    };
    for (factors, c) in first.iter() {
        let mark = vars.len();
        vars.extend_from_slice(factors);
        expand_product(rest, vars, &(coeff * c), acc);
        vars.truncate(mark);
    }
}

fn leibniz_sum(m: &SymbolicMatrix, signed: bool) -> Polynomial {
    let n = m.n;
    let terms = entry_terms(m);
    (0..factorial(n))
        .into_par_iter()
        .fold(PolynomialAccumulator::new, |mut acc, idx| {
            let p = Permutation::nth(n, idx);
            let rows: Vec<&EntryTerms> = (0..n).map(|i| &terms[i * n + p.apply(i)]).collect();
            if rows.iter().all(|r| !r.is_empty()) {
                let sign = if signed {
                    GaussianInteger::sign(p.inversion_number())
                } else {
                    GaussianInteger::ONE
                };
                expand_product(&rows, &mut Vec::with_capacity(2 * n), &sign, &mut acc);
            }
            acc
        })
        .reduce(PolynomialAccumulator::new, PolynomialAccumulator::merge)
        .into_polynomial()
}

/// `Σ_π sign(π) Π_i m[i, π(i)]`, enumerating all `n!` permutations.
pub fn leibniz_determinant(m: &SymbolicMatrix) -> Polynomial {
    leibniz_sum(m, true)
}

/// `Σ_π Π_i m[i, π(i)]`.
pub fn permanent(m: &SymbolicMatrix) -> Polynomial {
    leibniz_sum(m, false)
}

/// `Σ (-1)^crossings · weight` over all diagrams of size `n` labelled by
/// `lab`, without any global sign.
pub fn brauer_sum(n: usize, lab: Labeling) -> Polynomial {
    (0..matching_count(n))
        .into_par_iter()
        .fold(PolynomialAccumulator::new, |mut acc, idx| {
            let d = diagram_at(n, idx);
            acc.add_term(weight(&d, lab), &GaussianInteger::sign(crossing_number(&d)));
            acc
        })
        .reduce(PolynomialAccumulator::new, PolynomialAccumulator::merge)
        .into_polynomial()
}

/// The determinant of `build_matrix(n, variant)` as a diagram sum; the `B`
/// form carries the global sign `(-1)^(n choose 2)`.
pub fn brauer_determinant(n: usize, variant: Variant) -> Polynomial {
    let sum = brauer_sum(n, variant);
    match variant {
        Variant::B if pairs(n) % 2 == 1 => -sum,
        _ => sum,
    }
}

/// Pfaffian of the generic `2m x 2m` antisymmetric matrix with entries
/// `b[i,j]` above the diagonal: a signed sum over perfect matchings of
/// `1..=2m`, the sign being the parity of interleaving chord pairs.
pub fn pfaffian(m: usize) -> Polynomial {
    let mut acc = PolynomialAccumulator::new();
    for idx in 0..matching_count(m) {
        let partner = matching_at(m, idx);
        let chords: Vec<(usize, usize)> = (0..2 * m)
            .filter(|&v| v < partner[v])
            .map(|v| (v, partner[v]))
            .collect();
        let mut crossings = 0;
        for (k, &(i, j)) in chords.iter().enumerate() {
            crossings += chords[k + 1..]
                .iter()
                .filter(|&&(x, y)| interleaved(i, j, x, y))
                .count();
        }
        let mono = Monomial::from_vars(
            chords
                .iter()
                .map(|&(i, j)| IndexedVar::b_hat(i as u32 + 1, j as u32 + 1)),
        );
        acc.add_term(mono, &GaussianInteger::sign(crossings));
    }
    acc.into_polynomial()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyReport {
    pub n: usize,
    pub holds: bool,
    /// Determinant of the antisymmetric specialization.
    pub lhs: Polynomial,
    /// Square of the Pfaffian for even `n`, zero for odd `n`.
    pub rhs: Polynomial,
}

/// Checks `det = pf²` (even `n`) or `det = 0` (odd `n`) for the
/// antisymmetric specialization of `M_F`.
pub fn verify_cayley(n: usize) -> CayleyReport {
    let lhs = leibniz_determinant(&antisymmetric_matrix(n));
    let rhs = if n.is_multiple_of(2) {
        let pf = pfaffian(n / 2);
        &pf * &pf
    } else {
        Polynomial::zero()
    };
    CayleyReport {
        n,
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn three_by_three_entries() {
        let f = build_matrix(3, Variant::F);
        assert_eq!(f.entry(0, 0), &p("a[1,1]"));
        assert_eq!(f.entry(0, 2), &p("a[1,3] + b[1,3]"));
        assert_eq!(f.entry(2, 1), &p("a[2,3] - b[2,3]"));
        let b = build_matrix(3, Variant::B);
        assert_eq!(b.entry(1, 0), &p("a[1,2] - I*b[1,2]"));
        assert_eq!(b.entry(1, 2), &p("a[2,3] + I*b[2,3]"));
    }

    #[test]
    fn one_by_one() {
        for v in Variant::ALL {
            let m = build_matrix(1, v);
            assert_eq!(leibniz_determinant(&m), p("a[1,1]"));
            assert_eq!(permanent(&m), p("a[1,1]"));
            assert_eq!(brauer_determinant(1, v), p("a[1,1]"));
        }
    }

    #[test]
    fn permanent_of_ones() {
        assert_eq!(
            permanent(&SymbolicMatrix::constant(3, 1)),
            Polynomial::constant(6)
        );
        assert_eq!(
            leibniz_determinant(&SymbolicMatrix::constant(3, 1)),
            Polynomial::zero()
        );
    }

    #[test]
    fn small_pfaffians() {
        assert_eq!(pfaffian(1), p("b[1,2]"));
        assert_eq!(
            pfaffian(2),
            p("b[1,2]*b[3,4] - b[1,3]*b[2,4] + b[1,4]*b[2,3]")
        );
        assert_eq!(pfaffian(3).count_distinct_terms(), 15);
    }

    #[test]
    fn two_by_two_cayley() {
        let r = verify_cayley(2);
        assert!(r.holds);
        assert_eq!(r.lhs, p("b[1,2]^2"));
        let r = verify_cayley(3);
        assert!(r.holds);
        assert!(r.lhs.is_zero());
    }

    #[test]
    fn diagram_sum_matches_leibniz_small() {
        for n in 1..=4 {
            for v in Variant::ALL {
                assert_eq!(
                    brauer_determinant(n, v),
                    leibniz_determinant(&build_matrix(n, v))
                );
            }
        }
    }

    #[test]
    fn custom_requires_square() {
        assert!(SymbolicMatrix::custom(2, vec![Polynomial::zero(); 3]).is_err());
    }
}
