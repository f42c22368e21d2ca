//! Formal exterior algebra over a finite generator catalog with
//! polynomial coefficients, together with a table-driven derivation
//! operator, linear substitution, and tableau extraction.
//!
//! Generators are formal real one-forms; complex forms are represented as
//! combinations with Gaussian-rational (or polynomial) coefficients, so
//! conjugation acts on coefficients only.

pub mod form;
pub mod generator;
pub mod tableau;

pub use form::{DerivationTable, ExteriorError, Form};
pub use generator::{Catalog, GenId, GenKey, StarFam};
pub use tableau::{tableau_extract, Tableau};
