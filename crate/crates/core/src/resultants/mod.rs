//! Bezout, Sylvester and Hybrid Bezout resultant matrices.

mod bezout;
mod checks;
mod companion;
mod sylvester;

pub use bezout::{bezout_matrix, bezout_matrix_padded, bezoutian, bezoutian_entry_formula};
pub use checks::check_product_factor_divisibility;
pub use companion::{
    companion, companion_h, companion_h_scaled, companion_monic, eval_poly_at_matrix,
    hybrid_bezout, hybrid_bezout_generic, reversal, t_matrix,
};
pub use sylvester::{resultant_generic, resultant_h, resultant_tv, resultant_u, sylvester_matrix};
