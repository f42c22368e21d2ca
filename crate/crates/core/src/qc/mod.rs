//! The generated quaternionic-contact Cartan-connection system: coframe
//! catalog, structure equations, starred curvature one-forms, Bianchi
//! three-forms, the adapted real basis, the covariant-derivative
//! parameterization of the solution space, and the shifted system.

pub mod bianchi;
pub mod dsquared;
pub mod equations;
pub mod families;
pub mod integral;
pub mod shift;
pub mod system;

pub use bianchi::{bianchi_forms, bianchi_forms_with, BianchiLabel, BianchiSet};
pub use dsquared::{verify_d_squared, DSquaredReport};
pub use families::SecFam;
pub use integral::{
    closure_holds, closure_residuals, covder_expansion, instantiate, integral_element_symbolic,
    integral_element_zero, random_second_order_values, seeded_second_order_values, IntegralElement,
};
pub use shift::{shift_invariance, shift_invariance_zero, shifted_bianchi, ShiftReport};
pub use system::{build_system, build_system_with, Corruption, QcSystem};
