use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rustc_hash::FxHashMap;

use super::{GaussianInteger, IndexedVar, Integer, Monomial, VarKind};
use crate::{Error, Result};

/// Sparse polynomial over the Gaussian integers.
///
/// Terms are kept in a map ordered by [`Monomial`]'s canonical order and zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, GaussianInteger>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: impl Into<GaussianInteger>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn var(v: IndexedVar) -> Self {
        Polynomial::term(GaussianInteger::ONE, Monomial::var(v))
    }

    pub fn term(c: impl Into<GaussianInteger>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Sums arbitrary (possibly repeated, possibly zero) terms into normal
    /// form.
    pub fn from_terms(items: impl IntoIterator<Item = (Monomial, GaussianInteger)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in items {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianInteger) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of monomials with nonzero coefficient.
    pub fn count_distinct_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianInteger)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianInteger {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &GaussianInteger) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, k)| (m.clone(), k * c)))
    }

    /// Substitutes zero for every variable matching `pred`.
    pub fn set_zero(&self, pred: impl Fn(&IndexedVar) -> bool) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.contains(&pred))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct variables appearing anywhere, in canonical order.
    pub fn variables(&self) -> Vec<IndexedVar> {
        let mut vs: Vec<IndexedVar> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// First monomial, in canonical order, whose coefficients differ.
    pub fn first_difference(
        &self,
        other: &Polynomial,
    ) -> Option<(Monomial, GaussianInteger, GaussianInteger)> {
        let mut keys: Vec<&Monomial> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (x, y) = (self.coefficient(m), other.coefficient(m));
            (x != y).then(|| (m.clone(), x, y))
        })
    }
}

/// Hash-based sum of many terms, for large reductions.
///
/// Two accumulators can be merged in any order; the resulting
/// [`Polynomial`] is the same.
#[derive(Clone, Default)]
pub struct PolynomialAccumulator {
    terms: FxHashMap<Monomial, GaussianInteger>,
}

impl PolynomialAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianInteger) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(acc) => *acc += c,
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn merge(mut self, other: PolynomialAccumulator) -> Self {
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (std::mem::take(&mut self.terms), other.terms)
        } else {
            (other.terms, std::mem::take(&mut self.terms))
        };
        for (m, c) in small {
            match big.get_mut(&m) {
                Some(acc) => *acc += &c,
                None => {
                    big.insert(m, c);
                }
            }
        }
        PolynomialAccumulator { terms: big }
    }

    pub fn into_polynomial(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &'a Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn term_text(m: &Monomial, c: &GaussianInteger) -> String {
    if m.is_one() {
        return c.to_string();
    }
    if c.is_real() {
        if c.re.is_one() {
            return m.to_string();
        }
        if (-&c.re).is_one() {
            return format!("-{m}");
        }
        return format!("{}*{m}", c.re);
    }
    if c.re.is_zero() {
        format!("{c}*{m}")
    } else {
        format!("({c})*{m}")
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in monomial order joined by ` + ` / ` - `,
    /// e.g. `a[1,1]*a[2,2] - 2*a[1,2]*b[1,2] + (1+2*I)*b[1,2]^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let text = term_text(m, c);
            match (k, text.strip_prefix('-')) {
                (0, _) => f.write_str(&text)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses sums of products of integers, `I`, `a[i,j]`/`b[i,j]` (with
    /// optional `^e`) and parenthesised subexpressions. Accepts the canonical
    /// text form and anything looser written in the same vocabulary.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negate = c == b'-';
            self.pos += 1;
        }
        let mut acc = self.product()?;
        if negate {
            acc = -acc;
        }
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.product()?;
            acc = if c == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn number(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn small(&mut self) -> Result<u32> {
        let digits = self.number()?;
        digits
            .parse()
            .map_err(|_| self.error("index or exponent too large"))
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'I') => {
                self.pos += 1;
                Ok(Polynomial::constant(GaussianInteger::I))
            }
            Some(c @ (b'a' | b'b')) => {
                self.pos += 1;
                let kind = if c == b'a' { VarKind::A } else { VarKind::B };
                self.expect(b'[')?;
                let i = self.small()?;
                self.expect(b',')?;
                let j = self.small()?;
                self.expect(b']')?;
                let v = IndexedVar::new(kind, i, j)?;
                let mut e = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e = self.small()?;
                }
                Ok(Polynomial::term(GaussianInteger::ONE, Monomial::pow(v, e)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n: Integer = self.number()?.parse()?;
                Ok(Polynomial::constant(n))
            }
            _ => Err(self.error("expected a factor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x = p("a[1,1] + b[1,2]");
        let y = p("a[1,1] - b[1,2]");
        assert_eq!((&x * &y).to_string(), "a[1,1]^2 - b[1,2]^2");
    }

    #[test]
    fn zero_absorbs() {
        let x = p("a[1,1] + 3*b[1,2]");
        assert!((&x * &Polynomial::zero()).is_zero());
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::zero().count_distinct_terms(), 0);
    }

    #[test]
    fn conjugate_pair_product() {
        let x = p("a[1,2] + I*b[1,2]");
        let y = p("a[1,2] - I*b[1,2]");
        assert_eq!(&x * &y, p("a[1,2]^2 + b[1,2]^2"));
    }

    #[test]
    fn skew_pfaffian_square_has_six_terms() {
        let pf = p("b[1,2]*b[3,4] - b[1,3]*b[2,4] + b[1,4]*b[2,3]");
        assert_eq!((&pf * &pf).count_distinct_terms(), 6);
    }

    #[test]
    fn canonical_text_roundtrip() {
        let x = p("2*I*b[1,2] - 3 + (1-2*I)*a[1,1]*a[2,2] - a[1,2]^3 + (-1)*I*b[2,3]");
        let text = x.to_string();
        assert_eq!(
            text,
            "-3 + (1-2*I)*a[1,1]*a[2,2] - a[1,2]^3 + 2*I*b[1,2] - 1*I*b[2,3]"
        );
        assert_eq!(p(&text), x);
    }

    #[test]
    fn parse_errors() {
        assert!("a[2,1]".parse::<Polynomial>().is_err());
        assert!("b[1,1]".parse::<Polynomial>().is_err());
        assert!("a[1,2] +".parse::<Polynomial>().is_err());
        assert!("x".parse::<Polynomial>().is_err());
        assert!("(a[1,2]".parse::<Polynomial>().is_err());
    }

    #[test]
    fn set_zero_drops_monomials() {
        let x = p("a[1,2]*b[1,2] + b[1,3]^2 - a[1,1]");
        assert_eq!(x.set_zero(|v| v.kind() == VarKind::A), p("b[1,3]^2"));
    }

    #[test]
    fn accumulator_matches_direct_sum() {
        let terms = [
            ("a[1,1]", 1),
            ("b[1,2]^2", 2),
            ("a[1,1]", -1),
            ("b[1,2]^2", 3),
        ];
        let mut acc = PolynomialAccumulator::new();
        let mut other = PolynomialAccumulator::new();
        for (k, (m, c)) in terms.iter().enumerate() {
            let mono = p(m).terms().next().unwrap().0.clone();
            let target = if k % 2 == 0 { &mut acc } else { &mut other };
            target.add_term(mono, &GaussianInteger::from(*c as i64));
        }
        assert_eq!(acc.merge(other).into_polynomial(), p("5*b[1,2]^2"));
    }
}
