//! Exact rational points on `O(n)` and `GO(n)`, evaluation checks and
//! evaluation-rank certificates of the standard bases.

mod points;
mod suite;

pub use points::{
    cayley, minus_element, random_go_point, random_go_point_in, random_on_point, random_on_point_in,
    random_so_point, random_so_point_in, xi, Component, FormMatrix, GroupPoint,
};
pub use suite::{
    basis_suite, evaluation_rank, point_batch, random_tableau_pair, standard_set, value_rank, verify_on_group,
    BasisElement, BasisReport, SuiteConfig,
};
