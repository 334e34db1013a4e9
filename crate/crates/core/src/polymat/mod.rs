//! Matrices over polynomial rings and their Smith normal forms.

mod checks;
mod matrix;
mod minors;
mod snf;

pub use checks::{check_cayley_padding, check_product_divisibility, rank_at};
pub use matrix::{nullspace, rank_q, rref, HPolyMat, Matrix, PolyMat, QMat};
pub use minors::{
    combinations, det_factors, det_factors_h, det_factors_h_minors, det_factors_h_snf,
    det_factors_minors, det_factors_snf, invariants_from_det_factors_h, minor_gcd, MINOR_CUTOFF,
};
pub use snf::{
    chain_quotients, invariant_factors_u, invariants_by_determinant, is_diagonal,
    is_divisibility_chain_h, is_divisibility_chain_u, is_unimodular, snf_homogeneous,
    snf_univariate, SmithForm,
};
