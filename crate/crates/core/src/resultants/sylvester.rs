use crate::error::{Error, Result};
use crate::poly::{BiHPoly, HPoly, UPoly, Q};
use crate::polymat::Matrix;
use crate::ring::Ring;

/// Sylvester matrix of two polynomials with ascending coefficients
/// (formal degrees `len - 1`), rows written with descending powers so
/// that `det = Res(f, g) = a_m^n prod g(roots of f)`.
pub fn sylvester_matrix<R: Ring>(f: &[R], g: &[R]) -> Result<Matrix<R>> {
    if f.is_empty() || g.is_empty() {
        return Err(Error::ZeroPolynomial("Sylvester matrix".into()));
    }
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut s = Matrix::zeros(size, size);
    for r in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            s.set(r, r + k, c.clone());
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            s.set(n + r, r + k, c.clone());
        }
    }
    Ok(s)
}

pub fn resultant_generic<R: Ring>(f: &[R], g: &[R]) -> Result<R> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    if m + n == 0 {
        return Ok(R::one());
    }
    sylvester_matrix(f, g)?.det()
}

/// Sylvester resultant of univariate polynomials at their true degrees.
pub fn resultant_u(f: &UPoly, g: &UPoly) -> Result<Q> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial(
            "resultant of two zero polynomials".into(),
        ));
    }
    if f.is_zero() || g.is_zero() {
        // Res(0, g) vanishes unless g is a nonzero constant
        let other = if f.is_zero() { g } else { f };
        return Ok(if other.is_constant() {
            Q::from_integer(1.into())
        } else {
            Q::from_integer(0.into())
        });
    }
    resultant_generic(f.coeffs(), g.coeffs())
}

/// Homogeneous resultant of two binary forms at their formal degrees.
pub fn resultant_h(f: &HPoly, g: &HPoly) -> Result<Q> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant of two zero forms".into()));
    }
    resultant_generic(f.coeffs(), g.coeffs())
}

/// `Res_{t,v}(F, G)` as a form in `(s,u)`.
pub fn resultant_tv(f: &BiHPoly, g: &BiHPoly) -> Result<HPoly> {
    resultant_generic(&f.tv_coefficients(), &g.tv_coefficients())
}
