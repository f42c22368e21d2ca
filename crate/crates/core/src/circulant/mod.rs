//! The circulant nondegeneracy toolkit: the integer recurrence, the
//! telescoping identities, the 3×3 reduction, and independent oracles for
//! the full-rank claim of the system `x_k + x_{k+4} + x_{k+6} ≡ 0 (mod n)`.

pub mod nondegen;
pub mod seq;
pub mod telescope;

pub use nondegen::{det3_check, nondegeneracy, CirculantSystem, Det3Report, NondegenReport};
pub use seq::{recurrence, root_product_minus_one, RecurrenceSeq};
pub use telescope::{telescoping_check, TelescopeReport};
