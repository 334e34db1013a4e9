use super::matrix::{HPolyMat, PolyMat};
use crate::error::{Error, Result};
use crate::poly::{content, factor_upoly, squarefree_decomposition, HPoly, UPoly, Q};
use crate::ring::Ring;

/// Diagonal invariant-factor chain of a polynomial matrix.
///
/// Nonzero factors come first, each dividing the next; zero factors pad
/// the tail up to `min(rows, cols)`. When transforms are tracked,
/// `left * A * right` equals the diagonal of `invariant_factors`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmithForm<P> {
    pub invariant_factors: Vec<P>,
    pub left: Option<PolyMat>,
    pub right: Option<PolyMat>,
}

impl<P: Ring> SmithForm<P> {
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_zero())
            .count()
    }
}

fn lowest_degree_pivot(a: &PolyMat, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let e = a.get(i, j);
            if let Some(d) = e.degree() {
                if best.map_or(true, |(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Divide a row by the rational content of all its polynomial entries.
fn primitive_row(a: &mut PolyMat, left: &mut Option<PolyMat>, i: usize) {
    let coeffs: Vec<Q> = a.row(i).iter().flat_map(|p| p.coeffs().to_vec()).collect();
    if coeffs.is_empty() {
        return;
    }
    let c = content(&coeffs);
    if c == Q::from_integer(1.into()) {
        return;
    }
    let inv = UPoly::constant(c.recip());
    a.scale_row(i, &inv);
    if let Some(l) = left {
        l.scale_row(i, &inv);
    }
}

/// Divide a column by the rational content of all its polynomial entries.
fn primitive_col(a: &mut PolyMat, right: &mut Option<PolyMat>, j: usize) {
    let coeffs: Vec<Q> = (0..a.rows())
        .flat_map(|i| a.get(i, j).coeffs().to_vec())
        .collect();
    if coeffs.is_empty() {
        return;
    }
    let c = content(&coeffs);
    if c == Q::from_integer(1.into()) {
        return;
    }
    let inv = c.recip();
    for i in 0..a.rows() {
        let e = a.get(i, j).scale(&inv);
        a.set(i, j, e);
    }
    if let Some(r) = right {
        for i in 0..r.rows() {
            let e = r.get(i, j).scale(&inv);
            r.set(i, j, e);
        }
    }
}

/// Smith normal form over `Q[x]` by gcd-pivot elimination.
///
/// Pivots are the lowest-degree nonzero entries of the trailing block,
/// ties broken by the lexicographically smallest position.
pub fn snf_univariate(a: &PolyMat, track: bool) -> Result<SmithForm<UPoly>> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let (m, n) = (a.rows(), a.cols());
    let mut a = a.clone();
    let mut left = track.then(|| PolyMat::identity(m));
    let mut right = track.then(|| PolyMat::identity(n));
    let k = m.min(n);
    for t in 0..k {
        loop {
            let Some((pi, pj)) = lowest_degree_pivot(&a, t) else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(l) = &mut left {
                l.swap_rows(t, pi);
            }
            if let Some(r) = &mut right {
                r.swap_cols(t, pj);
            }
            let piv = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..m {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).div_rem(&piv);
                let nq = -q;
                a.add_row_multiple(i, t, &nq);
                if let Some(l) = &mut left {
                    l.add_row_multiple(i, t, &nq);
                }
                dirty |= !r.is_zero();
                primitive_row(&mut a, &mut left, i);
            }
            for j in t + 1..n {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).div_rem(&piv);
                let nq = -q;
                a.add_col_multiple(j, t, &nq);
                if let Some(rm) = &mut right {
                    rm.add_col_multiple(j, t, &nq);
                }
                dirty |= !r.is_zero();
                primitive_col(&mut a, &mut right, j);
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !piv.divides(a.get(i, j))));
            match bad {
                Some(i) => {
                    let one = UPoly::one();
                    a.add_row_multiple(t, i, &one);
                    if let Some(l) = &mut left {
                        l.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        // scale the pivot to its normalized representative
        let d = a.get(t, t).clone();
        if !d.is_zero() {
            let c = d.normalized().leading().expect("nonzero") / d.leading().expect("nonzero");
            let cp = UPoly::constant(c);
            a.scale_row(t, &cp);
            if let Some(l) = &mut left {
                l.scale_row(t, &cp);
            }
        }
    }
    let invariant_factors = (0..k).map(|i| a.get(i, i).clone()).collect();
    Ok(SmithForm {
        invariant_factors,
        left,
        right,
    })
}

/// Exponents of the irreducible `p` in the invariant factors of a square
/// matrix whose determinant has `p`-valuation `e`, by elimination over
/// `Q[x]/(p^(e+1))` with minimal-valuation pivots.
fn local_valuations(a: &PolyMat, p: &UPoly, e: usize) -> Result<Vec<usize>> {
    let n = a.rows();
    let m = p.pow(e + 1);
    let cap = e + 1;
    let val = |x: &UPoly| {
        if x.is_zero() {
            cap
        } else {
            x.multiplicity_of(p).min(cap)
        }
    };
    let mut b: Vec<Vec<UPoly>> = (0..n)
        .map(|i| (0..n).map(|j| a.get(i, j).rem(&m)).collect())
        .collect();
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in b.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                let v = val(x);
                if v < cap && best.map_or(true, |(bv, _, _)| v < bv) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, pi, pj)) = best else {
            out.extend(std::iter::repeat(cap).take(n - t));
            break;
        };
        b.swap(t, pi);
        for row in &mut b {
            row.swap(t, pj);
        }
        // pivot = p^v u with u a local unit; row_i <- u row_i - w row_t
        // clears a_it = p^v w without inverting u
        let pv = p.pow(v);
        let u = b[t][t].exact_div(&pv)?;
        for i in t + 1..n {
            if b[i][t].is_zero() {
                continue;
            }
            let w = b[i][t].exact_div(&pv)?;
            for j in t..n {
                let r = (&(&u * &b[i][j]) - &(&w * &b[t][j])).rem(&m);
                b[i][j] = r;
            }
            let c = content(
                &b[i]
                    .iter()
                    .flat_map(|x| x.coeffs().to_vec())
                    .collect::<Vec<_>>(),
            );
            for x in &mut b[i] {
                *x = x.scale(&c.recip());
            }
        }
        out.push(v);
    }
    if out.iter().sum::<usize>() != e {
        return Err(Error::Inconsistent(format!(
            "local valuations {out:?} do not add up to the determinant valuation {e}"
        )));
    }
    Ok(out)
}

/// Invariant factors of a square nonsingular matrix read off its
/// determinant: an irreducible factor of multiplicity one can only sit in
/// the last invariant factor, and repeated ones are resolved locally.
/// `None` for non-square or singular input.
pub fn invariants_by_determinant(a: &PolyMat) -> Result<Option<Vec<UPoly>>> {
    if !a.is_square() || a.rows() == 0 {
        return Ok(None);
    }
    let n = a.rows();
    let d = a.det()?;
    if d.is_zero() {
        return Ok(None);
    }
    let mut f = vec![UPoly::one(); n];
    for (g, k) in squarefree_decomposition(&d)? {
        if k == 1 {
            f[n - 1] = &f[n - 1] * &g;
            continue;
        }
        for (p, _) in factor_upoly(&g)?.factors {
            for (i, v) in local_valuations(a, &p, k)?.into_iter().enumerate() {
                if v > 0 {
                    f[i] = &f[i] * &p.pow(v);
                }
            }
        }
    }
    Ok(Some(f.into_iter().map(|x| x.normalized()).collect()))
}

/// Invariant factors only: the determinant route when it applies,
/// elimination otherwise.
pub fn invariant_factors_u(a: &PolyMat) -> Result<Vec<UPoly>> {
    match invariants_by_determinant(a)? {
        Some(f) => Ok(f),
        None => Ok(snf_univariate(a, false)?.invariant_factors),
    }
}

/// Successive quotients `f_1, f_2/f_1, ...` of an invariant-factor chain;
/// a quotient involving a zero factor is zero.
pub fn chain_quotients(f: &[UPoly]) -> Result<Vec<UPoly>> {
    let mut out = Vec::with_capacity(f.len());
    let mut prev = UPoly::one();
    for x in f {
        if x.is_zero() {
            out.push(UPoly::zero());
            continue;
        }
        out.push(x.exact_div(&prev)?.normalized());
        prev = x.clone();
    }
    Ok(out)
}

/// Homogeneous Smith normal form assembled from the two affine charts:
/// the `k`-th successive quotient is the lcm of the homogenized chart
/// quotients, and the invariant factors are the running products.
pub fn snf_homogeneous(a: &HPolyMat) -> Result<SmithForm<HPoly>> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let q1 = chain_quotients(&invariant_factors_u(&a.chart_first())?)?;
    let q2 = chain_quotients(&invariant_factors_u(&a.chart_second())?)?;
    let mut out = Vec::with_capacity(q1.len());
    let mut acc = HPoly::one();
    for (x, y) in q1.iter().zip(&q2) {
        if x.is_zero() || y.is_zero() {
            if !(x.is_zero() && y.is_zero()) {
                return Err(Error::Inconsistent(
                    "chart ranks differ in homogeneous Smith form".into(),
                ));
            }
            out.push(HPoly::zero(0));
            continue;
        }
        let hx = HPoly::homogenize_tight(x);
        let hy = HPoly::homogenize_second(y, y.deg())?;
        acc = (&acc * &hx.lcm(&hy)?).normalized();
        out.push(acc.clone());
    }
    Ok(SmithForm {
        invariant_factors: out,
        left: None,
        right: None,
    })
}

/// Does the chain satisfy `f_k | f_{k+1}` with zeros only at the tail and
/// every nonzero factor normalized?
pub fn is_divisibility_chain_h(f: &[HPoly]) -> bool {
    let mut seen_zero = false;
    for w in f.windows(2) {
        if w[0].is_zero() {
            seen_zero = true;
        }
        if seen_zero && !w[1].is_zero() {
            return false;
        }
        if !w[0].is_zero() && !w[1].is_zero() && !w[0].divides(&w[1]) {
            return false;
        }
    }
    f.iter().all(|x| x.is_zero() || x.is_normalized())
}

pub fn is_divisibility_chain_u(f: &[UPoly]) -> bool {
    let mut seen_zero = false;
    for w in f.windows(2) {
        if w[0].is_zero() {
            seen_zero = true;
        }
        if seen_zero && !w[1].is_zero() {
            return false;
        }
        if !w[0].is_zero() && !w[0].divides(&w[1]) {
            return false;
        }
    }
    f.iter().all(|x| x.is_zero() || *x == x.normalized())
}

/// Matrix of constant determinant? (unimodular over `Q[x]`)
pub fn is_unimodular(m: &PolyMat) -> Result<bool> {
    let d = m.det()?;
    Ok(d.is_constant() && !d.is_zero())
}

/// Is `a` zero outside its leading diagonal?
pub fn is_diagonal(a: &PolyMat) -> bool {
    (0..a.rows()).all(|i| (0..a.cols()).all(|j| i == j || a.get(i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymat::Matrix;

    fn t() -> UPoly {
        UPoly::x()
    }

    #[test]
    fn already_diagonal() {
        let a = Matrix::diagonal(&[t(), t().pow(2)]);
        let s = snf_univariate(&a, true).unwrap();
        assert_eq!(s.invariant_factors, vec![t(), t().pow(2)]);
    }

    #[test]
    fn reorders_to_chain() {
        let a = Matrix::diagonal(&[t(), UPoly::one()]);
        let s = snf_univariate(&a, true).unwrap();
        assert_eq!(s.invariant_factors, vec![UPoly::one(), t()]);
        let d = s
            .left
            .unwrap()
            .mul(&a)
            .unwrap()
            .mul(&s.right.unwrap())
            .unwrap();
        assert_eq!(d, Matrix::diagonal(&s.invariant_factors));
    }

    #[test]
    fn non_chain_diagonal() {
        // diag(t, t+1) -> diag(1, t(t+1))
        let a = Matrix::diagonal(&[t(), UPoly::from_ints(&[1, 1])]);
        let s = snf_univariate(&a, true).unwrap();
        assert_eq!(
            s.invariant_factors,
            vec![UPoly::one(), UPoly::from_ints(&[0, 1, 1])]
        );
        let d = s
            .left
            .unwrap()
            .mul(&a)
            .unwrap()
            .mul(&s.right.unwrap())
            .unwrap();
        assert_eq!(d, Matrix::diagonal(&s.invariant_factors));
    }

    #[test]
    fn homogeneous_diag() {
        let tt = HPoly::x();
        let tv = HPoly::from_ints(&[0, 1, 0]);
        let a = Matrix::diagonal(&[tt.clone(), tv.clone()]);
        let s = snf_homogeneous(&a).unwrap();
        assert_eq!(s.invariant_factors, vec![tt, tv]);
    }

    #[test]
    fn zero_matrix_rejected() {
        assert_eq!(
            snf_univariate(&PolyMat::zeros(2, 2), false),
            Err(Error::ZeroMatrix)
        );
    }
}
