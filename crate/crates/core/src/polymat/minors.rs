use super::matrix::{HPolyMat, PolyMat};
use super::snf::{snf_homogeneous, snf_univariate};
use crate::error::{Error, Result};
use crate::poly::{HPoly, UPoly};

/// Matrices up to this size get determinant factors from exhaustive
/// minor enumeration; larger ones go through the Smith form.
pub const MINOR_CUTOFF: usize = 6;

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of all `k x k` minors (zero if all vanish).
pub fn minor_gcd(a: &PolyMat, k: usize) -> Result<UPoly> {
    let mut g = UPoly::zero();
    for r in combinations(a.rows(), k) {
        for c in combinations(a.cols(), k) {
            let m = a.submatrix(&r, &c).det()?;
            g = g.gcd(&m);
            if g.is_constant() && !g.is_zero() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

/// `D_1, ..., D_rank` by exhaustive minors.
pub fn det_factors_minors(a: &PolyMat) -> Result<Vec<UPoly>> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let mut out = Vec::new();
    for k in 1..=a.rows().min(a.cols()) {
        let g = minor_gcd(a, k)?;
        if g.is_zero() {
            break;
        }
        out.push(g);
    }
    Ok(out)
}

/// `D_k` as running products of invariant factors.
pub fn det_factors_snf(a: &PolyMat) -> Result<Vec<UPoly>> {
    let s = snf_univariate(a, false)?;
    let mut acc = UPoly::one();
    Ok(s.invariant_factors
        .iter()
        .take_while(|f| !f.is_zero())
        .map(|f| {
            acc = (&acc * f).normalized();
            acc.clone()
        })
        .collect())
}

pub fn det_factors(a: &PolyMat) -> Result<Vec<UPoly>> {
    if a.rows().max(a.cols()) <= MINOR_CUTOFF {
        det_factors_minors(a)
    } else {
        det_factors_snf(a)
    }
}

/// Largest `e` with `y^e | f(1, y)`, i.e. the order of vanishing at `y = 0`.
fn low_order(f: &UPoly) -> usize {
    f.coeffs()
        .iter()
        .position(|c| !num_traits::Zero::is_zero(c))
        .unwrap_or(0)
}

/// Homogeneous `D_k` by exhaustive minors, assembled from both charts.
pub fn det_factors_h_minors(a: &HPolyMat) -> Result<Vec<HPoly>> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let (a1, a2) = (a.chart_first(), a.chart_second());
    let mut out = Vec::new();
    for k in 1..=a.rows().min(a.cols()) {
        let g1 = minor_gcd(&a1, k)?;
        if g1.is_zero() {
            break;
        }
        let g2 = minor_gcd(&a2, k)?;
        let d = &HPoly::homogenize_tight(&g1) * &HPoly::y().pow(low_order(&g2));
        out.push(d.normalized());
    }
    Ok(out)
}

pub fn det_factors_h_snf(a: &HPolyMat) -> Result<Vec<HPoly>> {
    let s = snf_homogeneous(a)?;
    let mut acc = HPoly::one();
    Ok(s.invariant_factors
        .iter()
        .take_while(|f| !f.is_zero())
        .map(|f| {
            acc = (&acc * f).normalized();
            acc.clone()
        })
        .collect())
}

pub fn det_factors_h(a: &HPolyMat) -> Result<Vec<HPoly>> {
    if a.rows().max(a.cols()) <= MINOR_CUTOFF {
        det_factors_h_minors(a)
    } else {
        det_factors_h_snf(a)
    }
}

/// Invariant factors `D_k / D_{k-1}` from determinant factors.
pub fn invariants_from_det_factors_h(d: &[HPoly]) -> Result<Vec<HPoly>> {
    let mut prev = HPoly::one();
    let mut out = Vec::with_capacity(d.len());
    for x in d {
        out.push(x.exact_div(&prev)?.normalized());
        prev = x.clone();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymat::Matrix;

    #[test]
    fn identity_and_scalar_diag() {
        let i3 = PolyMat::identity(3);
        assert_eq!(det_factors(&i3).unwrap(), vec![UPoly::one(); 3]);
        let t = UPoly::x();
        let d = Matrix::diagonal(&[t.clone(), t.clone()]);
        assert_eq!(det_factors(&d).unwrap(), vec![t.clone(), t.pow(2)]);
    }

    #[test]
    fn spec_style_example() {
        // [[t, t^2], [t^2, t^3 + t]]: D1 = t, D2 = t^2
        let t = UPoly::x();
        let a = Matrix::from_rows(vec![
            vec![t.clone(), t.pow(2)],
            vec![t.pow(2), &t.pow(3) + &t],
        ])
        .unwrap();
        assert_eq!(det_factors_minors(&a).unwrap(), vec![t.clone(), t.pow(2)]);
        assert_eq!(det_factors_snf(&a).unwrap(), vec![t.clone(), t.pow(2)]);
    }

    #[test]
    fn homogeneous_paths_agree() {
        let a = Matrix::from_rows(vec![
            vec![HPoly::from_ints(&[0, 0, 1]), HPoly::from_ints(&[0, 1, 0])],
            vec![HPoly::from_ints(&[0, 1, 1]), HPoly::from_ints(&[1, 0, 0])],
        ])
        .unwrap();
        assert_eq!(
            det_factors_h_minors(&a).unwrap(),
            det_factors_h_snf(&a).unwrap()
        );
    }

    #[test]
    fn subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
    }
}
