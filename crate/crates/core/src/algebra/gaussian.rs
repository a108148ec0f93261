use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::Integer;

/// An element `re + im·i` of the Gaussian integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianInteger {
    pub re: Integer,
    pub im: Integer,
}

impl GaussianInteger {
    pub const ZERO: GaussianInteger = GaussianInteger::new_small(0, 0);
    pub const ONE: GaussianInteger = GaussianInteger::new_small(1, 0);
    pub const I: GaussianInteger = GaussianInteger::new_small(0, 1);

    pub fn new(re: impl Into<Integer>, im: impl Into<Integer>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    pub const fn new_small(re: i64, im: i64) -> Self {
        GaussianInteger {
            re: Integer::Small(re),
            im: Integer::Small(im),
        }
    }

    pub fn real(re: impl Into<Integer>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: Integer::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> GaussianInteger {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `(-1)^k` as a Gaussian integer.
    pub fn sign(k: usize) -> GaussianInteger {
        if k.is_multiple_of(2) {
            GaussianInteger::ONE
        } else {
            -GaussianInteger::ONE
        }
    }

    /// `i^k`.
    pub fn i_pow(k: usize) -> GaussianInteger {
        match k % 4 {
            0 => GaussianInteger::new_small(1, 0),
            1 => GaussianInteger::new_small(0, 1),
            2 => GaussianInteger::new_small(-1, 0),
            _ => GaussianInteger::new_small(0, -1),
        }
    }
}

/// `(a+bi)(c+di) = (ac - bd) + (ad + bc)i`.
pub fn gauss_mul(x: &GaussianInteger, y: &GaussianInteger) -> GaussianInteger {
    // units are by far the most common factors during expansion
    if y.im.is_zero() {
        if y.re.is_one() {
            return x.clone();
        }
        return GaussianInteger {
            re: &x.re * &y.re,
            im: &x.im * &y.re,
        };
    }
    if x.im.is_zero() {
        return GaussianInteger {
            re: &x.re * &y.re,
            im: &x.re * &y.im,
        };
    }
    GaussianInteger {
        re: &(&x.re * &y.re) - &(&x.im * &y.im),
        im: &(&x.re * &y.im) + &(&x.im * &y.re),
    }
}

impl fmt::Display for GaussianInteger {
    /// Prints `re`, `im*I` or `re+im*I` (`re-im*I` for negative imaginary
    /// part).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}*I", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}*I", self.re, self.im.abs())
                } else {
                    write!(f, "{}+{}*I", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for GaussianInteger {
    fn from(v: i64) -> Self {
        GaussianInteger::real(v)
    }
}

impl From<Integer> for GaussianInteger {
    fn from(v: Integer) -> Self {
        GaussianInteger::real(v)
    }
}

impl<'a> Add<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;

    fn add(self, rhs: &'a GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;

    fn sub(self, rhs: &'a GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianInteger> for &'a GaussianInteger {
    type Output = GaussianInteger;

    fn mul(self, rhs: &'a GaussianInteger) -> GaussianInteger {
        gauss_mul(self, rhs)
    }
}

impl Neg for &GaussianInteger {
    type Output = GaussianInteger;

    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianInteger {
    type Output = GaussianInteger;

    fn neg(self) -> GaussianInteger {
        -&self
    }
}

impl AddAssign<&GaussianInteger> for GaussianInteger {
    fn add_assign(&mut self, rhs: &GaussianInteger) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianInteger> for GaussianInteger {
    fn sub_assign(&mut self, rhs: &GaussianInteger) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussianInteger> for GaussianInteger {
            type Output = GaussianInteger;
            fn $m(self, rhs: GaussianInteger) -> GaussianInteger {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianInteger> for GaussianInteger {
            type Output = GaussianInteger;
            fn $m(self, rhs: &'a GaussianInteger) -> GaussianInteger {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInteger {
        GaussianInteger::new_small(re, im)
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(gauss_mul(&g(0, 1), &g(0, 1)), g(-1, 0));
    }

    #[test]
    fn one_is_identity() {
        assert_eq!(gauss_mul(&g(1, 0), &g(5, -3)), g(5, -3));
    }

    #[test]
    fn hand_expansion() {
        // (2·4 + 3·1) + (−2 + 12)i
        assert_eq!(gauss_mul(&g(2, 3), &g(4, -1)), g(11, 10));
        assert_eq!(gauss_mul(&g(4, -1), &g(2, 3)), g(11, 10));
    }

    #[test]
    fn zero_is_unique() {
        assert!(g(0, 0).is_zero());
        assert!(!g(0, 1).is_zero());
        assert!(!g(1, 0).is_zero());
        assert_eq!(&g(3, -2) - &g(3, -2), GaussianInteger::ZERO);
    }

    #[test]
    fn powers_of_i() {
        let mut acc = GaussianInteger::ONE;
        for k in 0..9 {
            assert_eq!(acc, GaussianInteger::i_pow(k));
            acc = gauss_mul(&acc, &GaussianInteger::I);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(-3, 0).to_string(), "-3");
        assert_eq!(g(0, 2).to_string(), "2*I");
        assert_eq!(g(0, -1).to_string(), "-1*I");
        assert_eq!(g(1, 2).to_string(), "1+2*I");
        assert_eq!(g(1, -2).to_string(), "1-2*I");
    }
}
