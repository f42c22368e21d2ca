//! The generic Cartan machinery: exact ranks, the filtration and character
//! sequence, the solution-space dimension two ways, and the involutivity
//! test itself.

pub mod characters;
pub mod closed_form;
pub mod nullity;
pub mod rank;

pub use characters::{cartan_test, characters, CartanVerdict, CharacterReport};
pub use closed_form::{
    big_d, cartan_sum, closed_form_counts, d1, d2, dim_f_n, v_closed, ClosedFormCounts,
};
pub use nullity::solution_space_nullity;
pub use rank::{exact_rank, exact_rank_sparse, RowSpace, SparseRow};
