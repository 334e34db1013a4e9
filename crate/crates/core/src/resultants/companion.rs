//! Companion matrices and the Hybrid Bezout factorization `B = T_m H`.
//!
//! Polynomials are passed as ascending coefficient slices over any
//! [`Ring`]; the names `p_0, ..., p_n` refer to the
//! descending order, so `p_0` is the leading coefficient.

use crate::error::{Error, Result};
use crate::poly::{UPoly, Q};
use crate::polymat::{Matrix, QMat};
use crate::ring::Ring;

/// `p_k` in descending notation.
fn p_desc<R: Ring>(p: &[R], k: usize) -> &R {
    &p[p.len() - 1 - k]
}

fn check_leading<R: Ring>(p: &[R]) -> Result<usize> {
    match p.last() {
        None => Err(Error::ZeroPolynomial(
            "companion of an empty polynomial".into(),
        )),
        Some(c) if c.is_zero() => Err(Error::ZeroPolynomial(
            "leading coefficient p0 is zero".into(),
        )),
        Some(_) if p.len() < 2 => Err(Error::DegreeMismatch("companion of a constant".into())),
        Some(_) => Ok(p.len() - 1),
    }
}

/// `Delta_P`: `p_0` on the subdiagonal, last column `-p_n, ..., -p_1`.
pub fn companion<R: Ring>(p: &[R]) -> Result<Matrix<R>> {
    let n = check_leading(p)?;
    let mut d = Matrix::zeros(n, n);
    for i in 1..n {
        d.set(i, i - 1, p_desc(p, 0).clone());
    }
    for i in 0..n {
        d.set(i, n - 1, p_desc(p, n - i).neg());
    }
    Ok(d)
}

/// The reversal matrix `J_n`.
pub fn reversal<R: Ring>(n: usize) -> Matrix<R> {
    Matrix::from_fn(
        n,
        n,
        |i, j| if i + j + 1 == n { R::one() } else { R::zero() },
    )
}

/// Horner evaluation of an ascending coefficient list at a square matrix.
pub fn eval_poly_at_matrix<R: Ring>(q: &[R], m: &Matrix<R>) -> Result<Matrix<R>> {
    m.eval_poly(q)
}

/// `Delta_{P/p_0}` over the rationals.
pub fn companion_monic(p: &UPoly) -> Result<QMat> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("companion of zero".into()));
    }
    companion(p.monic().coeffs())
}

/// `H(Q, P) = J_n Q(Delta^t_{P/p_0}) J_n` over the rationals.
pub fn companion_h(q: &UPoly, p: &UPoly) -> Result<QMat> {
    let n = p
        .degree()
        .ok_or_else(|| Error::ZeroPolynomial("P is zero".into()))?;
    let dt = companion_monic(p)?.transpose();
    let j = reversal::<Q>(n);
    j.mul(&eval_poly_at_matrix(q.coeffs(), &dt)?)?.mul(&j)
}

/// `p_0^m H(Q, P)` with `m = len(q) - 1`, computed without division:
/// `J (sum_j q_j p_0^(m-j) (Delta_P^t)^j) J`.
pub fn companion_h_scaled<R: Ring>(q: &[R], p: &[R]) -> Result<Matrix<R>> {
    let n = check_leading(p)?;
    let m = q.len().saturating_sub(1);
    let p0 = p_desc(p, 0).clone();
    let dt = companion(p)?.transpose();
    let mut pw = vec![R::one()];
    for k in 1..=m {
        pw.push(pw[k - 1].mul(&p0));
    }
    let scaled: Vec<R> = q
        .iter()
        .enumerate()
        .map(|(j, c)| c.mul(&pw[m - j]))
        .collect();
    let j = reversal::<R>(n);
    j.mul(&eval_poly_at_matrix(&scaled, &dt)?)?.mul(&j)
}

/// `T_m`: upper-triangular Toeplitz block `(i, j) -> p_{j-i}` in the top
/// left `m x m` corner, identity elsewhere. `T_0` is the identity.
pub fn t_matrix<R: Ring>(p: &[R], m: usize) -> Result<Matrix<R>> {
    let n = check_leading(p)?;
    if m > n {
        return Err(Error::DegreeMismatch(format!("T_m with m = {m} > n = {n}")));
    }
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i < m && j < m {
            if j >= i {
                p_desc(p, j - i).clone()
            } else {
                R::zero()
            }
        } else if i == j {
            R::one()
        } else {
            R::zero()
        }
    }))
}

/// Hybrid Bezout matrix `T_m H(Q, P)` over any ring, via exact division
/// of `T_m (p_0^m H)` by `p_0^m`.
pub fn hybrid_bezout_generic<R: Ring>(q: &[R], p: &[R]) -> Result<Matrix<R>> {
    let n = check_leading(p)?;
    let m = q.len().saturating_sub(1);
    if m > n {
        return Err(Error::DegreeMismatch(format!(
            "deg Q = {m} exceeds deg P = {n}"
        )));
    }
    let p0m = (0..m).fold(R::one(), |acc, _| acc.mul(p_desc(p, 0)));
    let prod = t_matrix(p, m)?.mul(&companion_h_scaled(q, p)?)?;
    prod.try_map(|x| {
        x.div_exact(&p0m)
            .ok_or_else(|| Error::InexactDivision("hybrid Bezout entry".into()))
    })
}

/// Hybrid Bezout matrix of rational polynomials, `deg Q <= deg P`.
pub fn hybrid_bezout(q: &UPoly, p: &UPoly) -> Result<QMat> {
    let n = p
        .degree()
        .ok_or_else(|| Error::ZeroPolynomial("P is zero".into()))?;
    let m = q.degree().unwrap_or(0);
    if m > n {
        return Err(Error::DegreeMismatch(format!(
            "deg Q = {m} exceeds deg P = {n}"
        )));
    }
    let mut qc = q.coeffs().to_vec();
    qc.resize(m + 1, Q::from_integer(0.into()));
    hybrid_bezout_generic(&qc, p.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    #[test]
    fn companion_of_t2_minus_1() {
        let d = companion(UPoly::from_ints(&[-1, 0, 1]).coeffs()).unwrap();
        assert_eq!(
            d,
            Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap()
        );
    }

    #[test]
    fn unit_q_gives_identity() {
        let p = UPoly::from_ints(&[5, -2, 0, 3]);
        assert_eq!(companion_h(&UPoly::one(), &p).unwrap(), QMat::identity(3));
        assert_eq!(hybrid_bezout(&UPoly::one(), &p).unwrap(), QMat::identity(3));
        let j = reversal::<Q>(4);
        assert_eq!(j.mul(&j).unwrap(), QMat::identity(4));
    }

    #[test]
    fn hybrid_shape_m1_n3() {
        // Q = q0 t + q1, P = p0 t^3 + p1 t^2 + p2 t + p3
        let (q0, q1) = (2, 5);
        let (p0, p1, p2, p3) = (3, -1, 4, 7);
        let b = hybrid_bezout(
            &UPoly::from_ints(&[q1, q0]),
            &UPoly::from_ints(&[p3, p2, p1, p0]),
        )
        .unwrap();
        let want = vec![
            vec![q(p0 * q1 - p1 * q0), q(-p2 * q0), q(-p3 * q0)],
            vec![q(q0), q(q1), q(0)],
            vec![q(0), q(q0), q(q1)],
        ];
        assert_eq!(b, Matrix::from_rows(want).unwrap());
    }

    #[test]
    fn shared_root_is_singular() {
        let b = hybrid_bezout(&UPoly::from_ints(&[-1, 1]), &UPoly::from_ints(&[-1, 0, 1])).unwrap();
        assert_eq!(b.det().unwrap(), q(0));
        let p = UPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(hybrid_bezout(&p, &p).unwrap().det().unwrap(), q(0));
    }
}
