use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{HPoly, UPoly, Vars, Q};
use crate::ring::Ring;

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type QMat = Matrix<Q>;
pub type PolyMat = Matrix<UPoly>;
pub type HPolyMat = Matrix<HPoly>;

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<Matrix<S>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Dimension("matrix sum".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    /// Bottom-right block starting at `(k, k)`.
    pub fn trailing(&self, k: usize) -> Self {
        let r: Vec<usize> = (k..self.rows).collect();
        let c: Vec<usize> = (k..self.cols).collect();
        self.submatrix(&r, &c)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &R) {
        for j in 0..self.cols {
            let v = self.get(dst, j).add(&c.mul(self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &R) {
        for i in 0..self.rows {
            let v = self.get(i, dst).add(&c.mul(self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    pub fn scale_row(&mut self, i: usize, c: &R) {
        for j in 0..self.cols {
            let v = self.get(i, j).mul(c);
            self.set(i, j, v);
        }
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Dimension(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        negate = !negate;
                    }
                    None => return Ok(R::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j).mul(&pivot).sub(&a.get(i, k).mul(a.get(k, j)));
                    let v = num
                        .div_exact(&prev)
                        .ok_or_else(|| Error::InexactDivision("Bareiss step".into()))?;
                    a.set(i, j, v);
                }
                a.set(i, k, R::zero());
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Horner evaluation `c_0 I + c_1 M + ...` for ascending scalar
    /// coefficients.
    pub fn eval_poly(&self, coeffs: &[R]) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("polynomial of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut acc = Self::zeros(n, n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(self)?.add(&Self::identity(n).scale(c))?;
        }
        Ok(acc)
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

impl HPolyMat {
    /// Dehomogenize every entry at `y = 1`.
    pub fn chart_first(&self) -> PolyMat {
        self.map(|h| h.dehom_first())
    }

    /// Dehomogenize every entry at `x = 1`.
    pub fn chart_second(&self) -> PolyMat {
        self.map(|h| h.dehom_second())
    }

    pub fn eval_at(&self, x: &Q, y: &Q) -> Result<QMat> {
        if Ring::is_zero(x) && Ring::is_zero(y) {
            return Err(Error::ZeroPoint);
        }
        Ok(self.map(|h| h.eval_unchecked(x, y)))
    }

    pub fn fmt_rows(&self, vars: Vars) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|h| h.fmt_vars(vars)).collect())
            .collect()
    }
}

impl PolyMat {
    pub fn eval_at(&self, x: &Q) -> QMat {
        self.map(|p| p.eval(x))
    }
}

/// Exact rank of a rational matrix by fraction-free elimination over the
/// integers (each row is first cleared of denominators).
pub fn rank_q(m: &QMat) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * Q::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..rows {
            let f = a[i][c].clone();
            for j in c..cols {
                let v = (&a[i][j] * &pivot - &f * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Reduced row echelon form over the rationals; returns the pivot columns.
pub fn rref(m: &mut QMat) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !Ring::is_zero(m.get(i, c))) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = m.get(r, c).recip();
        m.scale_row(r, &inv);
        for i in 0..rows {
            if i != r && !Ring::is_zero(m.get(i, c)) {
                let f = -m.get(i, c).clone();
                m.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right nullspace, one vector per free column in
/// increasing column order.
pub fn nullspace(m: &QMat) -> Vec<Vec<Q>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let cols = m.cols();
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![<Q as Ring>::zero(); cols];
        v[free] = <Q as Ring>::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a.get(r, free).clone();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn qm(r: &[&[i64]]) -> QMat {
        Matrix::from_rows(
            r.iter()
                .map(|x| x.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = qm(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2(3*-2 - 20) + 1(-2 - 0) = -52 - 2
        assert_eq!(m.det().unwrap(), q(-54));
        let s = qm(&[&[0, 1], &[1, 0]]);
        assert_eq!(s.det().unwrap(), q(-1));
    }

    #[test]
    fn rank_and_nullspace() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank_q(&m), 2);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        let v = Matrix::from_rows(vec![ns[0].clone()]).unwrap().transpose();
        assert!(m.mul(&v).unwrap().is_zero());
    }

    #[test]
    fn polynomial_determinant() {
        let t = UPoly::x();
        let m = Matrix::from_rows(vec![
            vec![t.clone(), t.pow(2)],
            vec![t.pow(2), &t.pow(3) + &t],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), t.pow(2));
    }
}
