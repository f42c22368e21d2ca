//! Gaussian rationals `a + b·i` with exact rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{rat, ratio, Rational};

/// A Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::new(rat(0), rat(0))
    }

    pub fn one() -> Self {
        Self::new(rat(1), rat(0))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(rat(0), rat(1))
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(rat(n), rat(0))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, rat(0))
    }

    /// `a/b + (c/d)i`, handy in tests and transcription tables.
    pub fn of(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(ratio(a, b), ratio(c, d))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|² = re² + im²`, a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        Self::new(&self.re / &n, -&self.im / &n)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// Multiplication by `i^k`.
    pub fn mul_i_pow(&self, k: u8) -> Self {
        match k % 4 {
            0 => self.clone(),
            1 => Self::new(-self.im.clone(), self.re.clone()),
            2 => -self,
            _ => Self::new(self.im.clone(), -self.re.clone()),
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use super::rational_string as rs;
        if self.im.is_zero() {
            return write!(f, "{}", rs(&self.re));
        }
        if self.re.is_zero() {
            if self.im == rat(1) {
                return write!(f, "i");
            }
            if self.im == rat(-1) {
                return write!(f, "-i");
            }
            return write!(f, "{}i", rs(&self.im));
        }
        if self.im.is_negative_rat() {
            write!(f, "{}-{}i", rs(&self.re), rs(&(-self.im.clone())))
        } else {
            write!(f, "{}+{}i", rs(&self.re), rs(&self.im))
        }
    }
}

trait NegRat {
    fn is_negative_rat(&self) -> bool;
}
impl NegRat for Rational {
    fn is_negative_rat(&self) -> bool {
        self.numer().sign() == num_bigint::Sign::Minus
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_plus_i_times_conj() {
        // (1/2 + i)(1/2 - i) = 1/4 + 1 = 5/4
        let z = GaussianRational::of(1, 2, 1, 1);
        let w = z.conj();
        assert_eq!(&z * &w, GaussianRational::of(5, 4, 0, 1));
        assert_eq!(z.norm_sqr(), ratio(5, 4));
    }

    #[test]
    fn conj_involution() {
        let z = GaussianRational::of(3, 7, -2, 5);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn i_pow_cycle() {
        let z = GaussianRational::of(1, 1, 2, 1);
        assert_eq!(z.mul_i_pow(1), &z * &GaussianRational::i());
        assert_eq!(z.mul_i_pow(2), -&z);
        assert_eq!(z.mul_i_pow(4), z);
    }

    #[test]
    fn inverse() {
        let z = GaussianRational::of(1, 2, -1, 3);
        assert_eq!(&z * &z.inv(), GaussianRational::one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::of(1, 2, 0, 1).to_string(), "1/2");
        assert_eq!(GaussianRational::of(0, 1, -1, 1).to_string(), "-i");
        assert_eq!(GaussianRational::of(2, 1, -3, 4).to_string(), "2-3/4i");
    }
}
