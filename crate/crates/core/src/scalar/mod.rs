//! Exact scalar tower: arbitrary-precision rationals, Gaussian rationals,
//! and sparse multivariate polynomials over the Gaussian rationals.
//!
//! Everything in this crate computes over these scalars; there is no
//! floating point anywhere.

pub mod gaussian;
pub mod intpoly;
pub mod poly;

pub use gaussian::GaussianRational;
pub use intpoly::{poly_gcd, IntPoly};
pub use poly::{Monomial, PolyScalar, SymbolId, SymbolTable};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `a/b`. Panics on `b == 0`.
pub fn ratio(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Decimal-string form used by the JSON report: `"num"` for integers,
/// `"num/den"` otherwise.
pub fn rational_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse the decimal-string form produced by [`rational_string`].
pub fn rational_from_string(s: &str) -> Option<Rational> {
    let mut it = s.splitn(2, '/');
    let num: BigInt = it.next()?.parse().ok()?;
    match it.next() {
        None => Some(Rational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.parse().ok()?;
            if den.sign() == num_bigint::Sign::NoSign {
                None
            } else {
                Some(Rational::new(num, den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use proptest::prelude::*;

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..80).prop_map(|(a, b)| ratio(a, b))
    }

    proptest! {
        #[test]
        fn add_associative(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        }

        #[test]
        fn mul_distributes(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        }

        #[test]
        fn reduced_after_ops(a in arb_rat(), b in arb_rat()) {
            let s = &a * &b;
            if !s.is_zero() {
                let g = num_integer::Integer::gcd(s.numer(), s.denom());
                prop_assert_eq!(g, BigInt::from(1));
            }
            prop_assert!(s.denom().sign() != num_bigint::Sign::Minus);
        }

        #[test]
        fn string_round_trip(a in arb_rat()) {
            prop_assert_eq!(rational_from_string(&rational_string(&a)), Some(a));
        }
    }
}
