use crate::error::{Error, Result};
use crate::poly::{BiHPoly, HPoly};
use crate::polymat::{HPolyMat, Matrix};
use crate::ring::Ring;

/// Cayley-quotient Bezoutian of two polynomials of formal degree `m`
/// given by ascending coefficients `alpha`, `beta` (both of length
/// `m + 1`). Entry `(i, j)` is the coefficient of `t^i abar^j` in
/// `(F(t) G(abar) - F(abar) G(t)) / (t - abar)`.
pub fn bezoutian<R: Ring>(alpha: &[R], beta: &[R]) -> Result<Matrix<R>> {
    if alpha.len() != beta.len() || alpha.is_empty() {
        return Err(Error::DegreeMismatch(format!(
            "Bezoutian of formal degrees {} and {}",
            alpha.len() as isize - 1,
            beta.len() as isize - 1
        )));
    }
    let m = alpha.len() - 1;
    let num = |x: usize, y: usize| alpha[x].mul(&beta[y]).sub(&alpha[y].mul(&beta[x]));
    let mut b = Matrix::<R>::zeros(m, m);
    // N[x][y] = B[x-1][y] - B[x][y-1]
    for x in 0..m {
        for y in 1..=m {
            let above = if x >= 1 && y < m {
                b.get(x - 1, y).clone()
            } else {
                R::zero()
            };
            b.set(x, y - 1, above.sub(&num(x, y)));
        }
    }
    Ok(b)
}

/// The same matrix from the closed entry formula
/// `b_ij = sum_{k=1}^{min(i, m+1-j)} alpha_{j+k-1} beta_{i-k} - alpha_{i-k} beta_{j+k-1}`
/// (1-based `i, j`).
pub fn bezoutian_entry_formula<R: Ring>(alpha: &[R], beta: &[R]) -> Result<Matrix<R>> {
    if alpha.len() != beta.len() || alpha.is_empty() {
        return Err(Error::DegreeMismatch("Bezoutian entry formula".into()));
    }
    let m = alpha.len() - 1;
    Ok(Matrix::from_fn(m, m, |i0, j0| {
        let (i, j) = (i0 + 1, j0 + 1);
        let mut acc = R::zero();
        for k in 1..=i.min(m + 1 - j) {
            let t1 = alpha[j + k - 1].mul(&beta[i - k]);
            let t2 = alpha[i - k].mul(&beta[j + k - 1]);
            acc = acc.add(&t1.sub(&t2));
        }
        acc
    }))
}

/// `B_{t,v}(F, G)` for bihomogeneous `F`, `G` of equal `(t,v)`-degree;
/// entries are forms in `(s,u)`.
pub fn bezout_matrix(f: &BiHPoly, g: &BiHPoly) -> Result<HPolyMat> {
    if f.degree_tv() != g.degree_tv() {
        return Err(Error::DegreeMismatch(format!(
            "Bezout matrix needs equal (t,v)-degrees, got {} and {}",
            f.degree_tv(),
            g.degree_tv()
        )));
    }
    bezoutian(&f.tv_coefficients(), &g.tv_coefficients())
}

/// Bezout matrix for unequal `(t,v)`-degrees: the lower-degree input is
/// lifted by a power of `v` first.
pub fn bezout_matrix_padded(f: &BiHPoly, g: &BiHPoly) -> Result<HPolyMat> {
    let (df, dg) = (f.degree_tv(), g.degree_tv());
    let lift = |p: &BiHPoly, e: usize| &BiHPoly::from_tv(&HPoly::y().pow(e)) * p;
    if df < dg {
        bezout_matrix(&lift(f, dg - df), g)
    } else {
        bezout_matrix(f, &lift(g, df - dg))
    }
}
