//! Exact-arithmetic construction and verification of the quaternionic-contact
//! Cartan-connection exterior differential system.
//!
//! The crate builds, for any rank `n ≥ 1`, the full structure-equation
//! system of the canonical Cartan connection of a quaternionic-contact
//! structure, derives its Bianchi three-forms, and certifies by brute-force
//! exact linear algebra that the system passes the Cartan involutivity
//! test: the character sequence, the solution-space dimension (computed two
//! independent ways), and every closed-form count match.
//!
//! Layout:
//! * [`scalar`]: rationals, Gaussian rationals, sparse polynomials;
//! * [`tensor`]: index conventions, the constants g and π, the antilinear
//!   operator 𝔧, symmetric arrays and dimension counting;
//! * [`exterior`]: formal exterior algebra with a table-driven derivation;
//! * [`qc`]: the generated connection system, its Bianchi forms, the
//!   adapted coframe, covariant-derivative parameterization and the shifted
//!   system;
//! * [`involution`]: exact ranks, filtration, characters, Cartan's test;
//! * [`circulant`]: the nondegeneracy toolkit for the mod-n circulant
//!   system behind the top-degree character.

pub mod circulant;
pub mod exterior;
pub mod involution;
pub mod qc;
pub mod scalar;
pub mod tensor;
