//! Exact arithmetic: Gaussian integers and sparse multivariate polynomials in
//! the indeterminates `a[i,j]`, `b[i,j]`.

mod gaussian;
mod integer;
mod monomial;
mod polynomial;

pub use gaussian::{gauss_mul, GaussianInteger};
pub use integer::Integer;
pub use monomial::{IndexedVar, Monomial, VarKind};
pub use polynomial::{Polynomial, PolynomialAccumulator};

/// Product of two polynomials in normal form.
pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p * q
}

/// Number of monomials with a nonzero coefficient.
pub fn count_distinct_terms(p: &Polynomial) -> usize {
    p.count_distinct_terms()
}
