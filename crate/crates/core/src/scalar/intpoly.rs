//! Univariate integer polynomials: just enough for primitive gcds and
//! exact remainder arithmetic. Serves as an independent oracle for the
//! circulant nondegeneracy checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntPolyError {
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
}

/// Coefficients stored low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `z^n - 1`.
    pub fn z_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// Content: gcd of coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly(self.0.iter().map(|c| c / &g).collect())
    }

    /// Pseudo-remainder: `lc(d)^(deg s - deg d + 1) * s mod d`, exact over Z.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "pseudo-division by zero");
        let dd = d.degree().unwrap();
        let lc = d.leading().unwrap().clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            if r[k].is_zero() {
                r.pop();
                continue;
            }
            if k < dd {
                break;
            }
            let top = r[k].clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for j in 0..=dd {
                let t = &top * &d.0[j];
                r[k - dd + j] -= t;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::new(r)
    }
}

/// Primitive gcd with positive leading coefficient (primitive PRS).
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> Result<IntPoly, IntPolyError> {
    if p.is_zero() && q.is_zero() {
        return Err(IntPolyError::BothZero);
    }
    let mut a = p.primitive();
    let mut b = q.primitive();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive();
        a = b;
        b = r;
    }
    Ok(a.primitive())
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "z")?,
                1 => write!(f, "{a}z")?,
                _ if a.is_one() => write!(f, "z^{e}")?,
                _ => write!(f, "{a}z^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_z2_minus_1_and_z_minus_1() {
        let p = IntPoly::from_ints(&[-1, 0, 1]);
        let q = IntPoly::from_ints(&[-1, 1]);
        assert_eq!(poly_gcd(&p, &q).unwrap(), q);
    }

    #[test]
    fn gcd_idempotent() {
        let p = IntPoly::from_ints(&[1, 1, 0, 1]); // z³+z+1
        assert_eq!(poly_gcd(&p, &p).unwrap(), p);
    }

    #[test]
    fn gcd_coprime() {
        // gcd(z⁷−1, z⁶+z⁴+1) = 1, checked by hand with the Euclidean algorithm:
        // z⁷−1 = z·(z⁶+z⁴+1) − (z⁵+z+1); the remainder sequence terminates at a constant.
        let p = IntPoly::z_pow_minus_one(7);
        let q = IntPoly::from_ints(&[1, 0, 0, 0, 1, 0, 1]);
        assert_eq!(poly_gcd(&p, &q).unwrap(), IntPoly::from_ints(&[1]));
    }

    #[test]
    fn both_zero_rejected() {
        assert_eq!(
            poly_gcd(&IntPoly::zero(), &IntPoly::zero()),
            Err(IntPolyError::BothZero)
        );
    }

    #[test]
    fn gcd_detects_common_cyclotomic_factor() {
        // z¹²−1 and z⁶+z⁴+1... no common root; but (z²−1)(z³+z+1) and (z²−1) share z²−1.
        let a = IntPoly::from_ints(&[-1, 0, 1]).mul(&IntPoly::from_ints(&[1, 1, 0, 1]));
        let b = IntPoly::from_ints(&[-2, 0, 2]); // content 2
        assert_eq!(poly_gcd(&a, &b).unwrap(), IntPoly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPoly::from_ints(&[1, 0, 1, 0, 0, 0, 1]).to_string(),
            "z^6 + z^2 + 1"
        );
        assert_eq!(IntPoly::from_ints(&[-1, 2]).to_string(), "2z - 1");
    }
}
