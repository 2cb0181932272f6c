//! Sparse polynomials in the `X(i,j)`, dense exact matrices, minors and bideterminants.

mod bidet;
mod matrix;
mod poly;

pub use bidet::{bideterminant, det_poly, eval_bideterminant, eval_minor, gamma_poly, minor};
pub use matrix::Matrix;
pub use poly::{Monomial, Polynomial, Var};
