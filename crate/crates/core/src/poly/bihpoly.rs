use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::upoly::owned_ops;
use super::{HPoly, Q};
use crate::error::{Error, Result};

/// Bihomogeneous polynomial in `(s,u; t,v)`.
///
/// `coeffs[i][j]` is the coefficient of `s^i u^(d_su-i) t^j v^(d_tv-j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiHPoly {
    d_su: usize,
    d_tv: usize,
    coeffs: Vec<Vec<Q>>,
}

impl BiHPoly {
    pub fn zero(d_su: usize, d_tv: usize) -> Self {
        BiHPoly {
            d_su,
            d_tv,
            coeffs: vec![vec![Q::zero(); d_tv + 1]; d_su + 1],
        }
    }

    pub fn new(coeffs: Vec<Vec<Q>>) -> Result<Self> {
        let rows = coeffs.len();
        if rows == 0 || coeffs[0].is_empty() || coeffs.iter().any(|r| r.len() != coeffs[0].len()) {
            return Err(Error::Dimension("ragged bihomogeneous grid".into()));
        }
        Ok(BiHPoly {
            d_su: rows - 1,
            d_tv: coeffs[0].len() - 1,
            coeffs,
        })
    }

    pub fn from_ints(c: &[&[i64]]) -> Self {
        Self::new(
            c.iter()
                .map(|r| r.iter().map(|&x| super::q(x)).collect())
                .collect(),
        )
        .expect("rectangular grid")
    }

    /// `f(s,u) * g(t,v)`
    pub fn outer(f_su: &HPoly, g_tv: &HPoly) -> Self {
        let mut out = Self::zero(f_su.degree(), g_tv.degree());
        for (i, a) in f_su.coeffs().iter().enumerate() {
            for (j, b) in g_tv.coeffs().iter().enumerate() {
                out.coeffs[i][j] = a * b;
            }
        }
        out
    }

    /// Embed a form in `(s,u)`.
    pub fn from_su(f: &HPoly) -> Self {
        Self::outer(f, &HPoly::one())
    }

    /// Embed a form in `(t,v)`.
    pub fn from_tv(g: &HPoly) -> Self {
        Self::outer(&HPoly::one(), g)
    }

    /// The Cayley factor `s v - t u`.
    pub fn cayley() -> Self {
        Self::from_ints(&[&[0, -1], &[1, 0]])
    }

    /// `sum_k f_k(s,u) * g_k(t,v)` over paired components.
    pub fn dot_outer(f: &[HPoly], g: &[HPoly]) -> Result<Self> {
        let mut acc: Option<BiHPoly> = None;
        for (a, b) in f.iter().zip(g) {
            let term = Self::outer(a, b);
            acc = Some(match acc {
                None => term,
                Some(x) => x.checked_add(&term)?,
            });
        }
        acc.ok_or_else(|| Error::Dimension("empty component list".into()))
    }

    pub fn degree_su(&self) -> usize {
        self.d_su
    }

    pub fn degree_tv(&self) -> usize {
        self.d_tv
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Q {
        &self.coeffs[i][j]
    }

    pub fn grid(&self) -> &[Vec<Q>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Q) -> Self {
        BiHPoly {
            d_su: self.d_su,
            d_tv: self.d_tv,
            coeffs: self
                .coeffs
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    /// Exchange the roles of `(s,u)` and `(t,v)`.
    pub fn swap_pairs(&self) -> Self {
        let mut out = Self::zero(self.d_tv, self.d_su);
        for i in 0..=self.d_su {
            for j in 0..=self.d_tv {
                out.coeffs[j][i] = self.coeffs[i][j].clone();
            }
        }
        out
    }

    /// Coefficients of `t^j v^(d_tv-j)` as forms in `(s,u)`, `j = 0..=d_tv`.
    pub fn tv_coefficients(&self) -> Vec<HPoly> {
        (0..=self.d_tv)
            .map(|j| {
                HPoly::from_coeffs((0..=self.d_su).map(|i| self.coeffs[i][j].clone()).collect())
            })
            .collect()
    }

    /// Coefficients of `s^i u^(d_su-i)` as forms in `(t,v)`.
    pub fn su_coefficients(&self) -> Vec<HPoly> {
        self.coeffs
            .iter()
            .map(|r| HPoly::from_coeffs(r.clone()))
            .collect()
    }

    /// Substitute `(s,u) = (s0,u0)`, leaving a form in `(t,v)`.
    pub fn eval_su(&self, s0: &Q, u0: &Q) -> Result<HPoly> {
        if s0.is_zero() && u0.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let c: Vec<Q> = self
            .tv_coefficients()
            .iter()
            .map(|f| f.eval_unchecked(s0, u0))
            .collect();
        Ok(HPoly::from_coeffs(c))
    }

    /// Substitute `(t,v) = (t0,v0)`, leaving a form in `(s,u)`.
    pub fn eval_tv(&self, t0: &Q, v0: &Q) -> Result<HPoly> {
        self.swap_pairs().eval_su(t0, v0)
    }

    pub fn eval(&self, s0: &Q, u0: &Q, t0: &Q, v0: &Q) -> Result<Q> {
        self.eval_su(s0, u0)?.eval(t0, v0)
    }

    /// Set `s = t`, `u = v`.
    pub fn diagonal(&self) -> HPoly {
        let mut out = HPoly::zero(self.d_su + self.d_tv);
        for (i, f) in self.su_coefficients().iter().enumerate() {
            let shifted = &f.clone() * &HPoly::monomial(Q::one(), i, self.d_su);
            out = &out + &shifted;
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&Q, &Q) -> Q) -> Result<Self> {
        if (self.d_su, self.d_tv) != (other.d_su, other.d_tv) {
            if other.is_zero() {
                return Ok(self.clone());
            }
            if self.is_zero() {
                return Ok(other
                    .scale(&Q::zero())
                    .combine(other, op)
                    .expect("same shape"));
            }
            return Err(Error::DegreeMismatch(format!(
                "bidegrees ({},{}) and ({},{})",
                self.d_su, self.d_tv, other.d_su, other.d_tv
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| op(a, b)).collect())
            .collect();
        Ok(BiHPoly {
            d_su: self.d_su,
            d_tv: self.d_tv,
            coeffs,
        })
    }

    /// `self / (s v - t u)`, verified by re-multiplication.
    pub fn divide_by_cayley(&self) -> Result<Self> {
        if self.d_su == 0 || self.d_tv == 0 {
            if self.is_zero() {
                return Ok(Self::zero(
                    self.d_su.saturating_sub(1),
                    self.d_tv.saturating_sub(1),
                ));
            }
            return Err(Error::DiagonalNonVanishing);
        }
        let (m, n) = (self.d_su - 1, self.d_tv - 1);
        let mut g = Self::zero(m, n);
        // f[i][j] = g[i-1][j] - g[i][j-1]
        for i in 0..=m {
            for j in 1..=self.d_tv {
                let prev = if i >= 1 && j <= n {
                    g.coeffs[i - 1][j].clone()
                } else {
                    Q::zero()
                };
                g.coeffs[i][j - 1] = prev - &self.coeffs[i][j];
            }
        }
        if &g * &Self::cayley() != *self {
            return Err(Error::DiagonalNonVanishing);
        }
        Ok(g)
    }

    /// Exact quotient `self / g`, verified by re-multiplication.
    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial("divisor".into()));
        }
        let err = || Error::InexactDivision("bihomogeneous division".into());
        if g.d_su > self.d_su || g.d_tv > self.d_tv {
            return Err(err());
        }
        let (qm, qn) = (self.d_su - g.d_su, self.d_tv - g.d_tv);
        if self.is_zero() {
            return Ok(Self::zero(qm, qn));
        }
        // dehomogenize u = v = 1 and divide in lex order (s first, then t)
        let mut r = self.coeffs.clone();
        let lead = |c: &Vec<Vec<Q>>| -> Option<(usize, usize)> {
            for i in (0..c.len()).rev() {
                if let Some(j) = c[i].iter().rposition(|x| !x.is_zero()) {
                    return Some((i, j));
                }
            }
            None
        };
        let (gi, gj) = lead(&g.coeffs).expect("nonzero divisor");
        let glc = g.coeffs[gi][gj].clone();
        let mut quo = Self::zero(qm, qn);
        while let Some((ri, rj)) = lead(&r) {
            if ri < gi || rj < gj || ri - gi > qm || rj - gj > qn {
                return Err(err());
            }
            let (a, b) = (ri - gi, rj - gj);
            let c = &r[ri][rj] / &glc;
            for (i, row) in g.coeffs.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        r[a + i][b + j] -= &c * x;
                    }
                }
            }
            quo.coeffs[a][b] += c;
        }
        if &quo * g != *self {
            return Err(err());
        }
        Ok(quo)
    }

    pub fn fmt_grid(&self) -> String {
        let mut out = String::new();
        for i in (0..=self.d_su).rev() {
            for j in (0..=self.d_tv).rev() {
                let c = &self.coeffs[i][j];
                if c.is_zero() {
                    continue;
                }
                super::hpoly::push_term(
                    &mut out,
                    c,
                    &[
                        ("s", i),
                        ("u", self.d_su - i),
                        ("t", j),
                        ("v", self.d_tv - j),
                    ],
                );
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

impl fmt::Display for BiHPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_grid())
    }
}

impl fmt::Debug for BiHPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiHPoly[{},{}]({self})", self.d_su, self.d_tv)
    }
}

impl<'a> Add<&'a BiHPoly> for &'a BiHPoly {
    type Output = BiHPoly;
    fn add(self, rhs: &BiHPoly) -> BiHPoly {
        self.checked_add(rhs).expect("bidegree mismatch")
    }
}

impl<'a> Sub<&'a BiHPoly> for &'a BiHPoly {
    type Output = BiHPoly;
    fn sub(self, rhs: &BiHPoly) -> BiHPoly {
        self.checked_sub(rhs).expect("bidegree mismatch")
    }
}

impl<'a> Mul<&'a BiHPoly> for &'a BiHPoly {
    type Output = BiHPoly;
    fn mul(self, rhs: &BiHPoly) -> BiHPoly {
        let mut out = BiHPoly::zero(self.d_su + rhs.d_su, self.d_tv + rhs.d_tv);
        for (i, r) in self.coeffs.iter().enumerate() {
            for (j, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, s) in rhs.coeffs.iter().enumerate() {
                    for (l, b) in s.iter().enumerate() {
                        if !b.is_zero() {
                            out.coeffs[i + k][j + l] += a * b;
                        }
                    }
                }
            }
        }
        out
    }
}

impl Neg for &BiHPoly {
    type Output = BiHPoly;
    fn neg(self) -> BiHPoly {
        self.scale(&-Q::one())
    }
}

owned_ops!(BiHPoly);
