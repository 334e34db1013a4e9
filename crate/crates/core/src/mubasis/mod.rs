//! Rational planar curves, their syzygy modules and μ-bases.

mod form3;
mod implicit;

pub use form3::Form3;
pub use implicit::{check_proper, implicit_degree, implicitize, Properness};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{HPoly, Vars, Q};
use crate::polymat::{nullspace, rank_q, QMat};
use crate::verify::Check;

/// A degree-`n` parametrization `P(t,v) = (a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSpec {
    pub n: usize,
    pub a: HPoly,
    pub b: HPoly,
    pub c: HPoly,
}

impl CurveSpec {
    /// Validates equal degrees, coprimality and linear independence.
    pub fn new(a: HPoly, b: HPoly, c: HPoly) -> Result<Self> {
        let n = a.degree();
        if b.degree() != n || c.degree() != n {
            return Err(Error::DegenerateCurve(format!(
                "components have degrees {}, {}, {}",
                a.degree(),
                b.degree(),
                c.degree()
            )));
        }
        if n == 0 {
            return Err(Error::DegenerateCurve("degree 0 parametrization".into()));
        }
        let rows: Vec<Vec<Q>> = [&a, &b, &c].iter().map(|h| h.coeffs().to_vec()).collect();
        let m = QMat::from_rows(rows)?;
        if rank_q(&m) < 3 {
            return Err(Error::DegenerateCurve(
                "components linearly dependent".into(),
            ));
        }
        let g = HPoly::gcd_all([&a, &b, &c])?;
        if g.degree() > 0 {
            return Err(Error::DegenerateCurve(format!(
                "components share the common factor {}",
                g.fmt_vars(Vars::TV)
            )));
        }
        Ok(CurveSpec { n, a, b, c })
    }

    pub fn components(&self) -> [&HPoly; 3] {
        [&self.a, &self.b, &self.c]
    }

    /// `P(t0, v0)` as a projective point.
    pub fn point_at(&self, t0: &Q, v0: &Q) -> Result<[Q; 3]> {
        Ok([
            self.a.eval(t0, v0)?,
            self.b.eval(t0, v0)?,
            self.c.eval(t0, v0)?,
        ])
    }

    /// `(a(M t), b(M t), c(M t))` for the parameter change
    /// `(t, v) -> (m00 t + m01 v, m10 t + m11 v)`.
    pub fn reparametrize(&self, m: [[Q; 2]; 2]) -> Result<Self> {
        let sub = |h: &HPoly| h.substitute_linear(&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
        CurveSpec::new(sub(&self.a), sub(&self.b), sub(&self.c))
    }

    /// Apply a projective transformation of the image plane (rows act on
    /// `(x, y, w)`).
    pub fn transform(&self, m: &[[Q; 3]; 3]) -> Result<Self> {
        let comps = self.components();
        let row = |r: &[Q; 3]| -> Result<HPoly> {
            let mut acc = HPoly::zero(self.n);
            for (k, c) in r.iter().enumerate() {
                acc = acc.checked_add(&comps[k].scale(c))?;
            }
            Ok(acc)
        };
        CurveSpec::new(row(&m[0])?, row(&m[1])?, row(&m[2])?)
    }
}

/// A moving line `(A, B, C)` with components of equal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy(pub [HPoly; 3]);

impl Syzygy {
    pub fn degree(&self) -> usize {
        self.0.iter().map(|h| h.degree()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|h| h.is_zero())
    }

    /// `A a + B b + C c`
    pub fn apply(&self, curve: &CurveSpec) -> HPoly {
        let comps = curve.components();
        (0..3).fold(HPoly::zero(0), |acc, k| &acc + &(&self.0[k] * comps[k]))
    }

    /// Common content removed, first nonzero leading coefficient positive.
    pub fn normalized(&self) -> Syzygy {
        let mut flat: Vec<Q> = self.0.iter().flat_map(|h| h.coeffs().to_vec()).collect();
        let Some(lead) = flat.iter().rposition(|c| !c.is_zero()) else {
            return self.clone();
        };
        crate::poly::make_primitive(&mut flat, lead);
        let d = self.degree();
        let mut it = flat.chunks(d + 1);
        Syzygy(std::array::from_fn(|_| {
            HPoly::from_coeffs(it.next().expect("three chunks").to_vec())
        }))
    }

    /// `A x + B y + C w` at a fixed point, a form of degree `deg`.
    pub fn dot_point(&self, x: &[Q; 3]) -> HPoly {
        let mut acc = HPoly::zero(self.degree());
        for k in 0..3 {
            if !self.0[k].is_zero() {
                acc = &acc + &self.0[k].scale(&x[k]);
            }
        }
        acc
    }

    pub fn scale(&self, c: &Q) -> Syzygy {
        Syzygy(std::array::from_fn(|k| self.0[k].scale(c)))
    }

    pub fn fmt_vars(&self, vars: Vars) -> [String; 3] {
        std::array::from_fn(|k| self.0[k].fmt_vars(vars))
    }
}

/// `u x w` for triples of forms.
pub fn cross(u: &[HPoly; 3], w: &[HPoly; 3]) -> [HPoly; 3] {
    [
        &(&u[1] * &w[2]) - &(&u[2] * &w[1]),
        &(&u[2] * &w[0]) - &(&u[0] * &w[2]),
        &(&u[0] * &w[1]) - &(&u[1] * &w[0]),
    ]
}

/// μ-basis `(p, q)` with `deg p = mu <= deg q = n - mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBasis {
    pub p: Syzygy,
    pub q: Syzygy,
    pub mu: usize,
}

/// Coefficient matrix of `(A, B, C) -> A a + B b + C c` for degree-`d`
/// unknowns, columns ordered `A_0..A_d, B_0..B_d, C_0..C_d`.
fn syzygy_system(curve: &CurveSpec, d: usize) -> QMat {
    let n = curve.n;
    let comps = curve.components();
    QMat::from_fn(n + d + 1, 3 * (d + 1), |k, col| {
        let (comp, i) = (col / (d + 1), col % (d + 1));
        if k >= i && k - i <= n {
            comps[comp].coeff(k - i).clone()
        } else {
            Q::zero()
        }
    })
}

fn vec_to_syzygy(v: &[Q], d: usize) -> Syzygy {
    Syzygy(std::array::from_fn(|k| {
        HPoly::from_coeffs(v[k * (d + 1)..(k + 1) * (d + 1)].to_vec())
    }))
}

/// A basis of the degree-`d` syzygies (as a rational vector space).
pub fn syzygies_of_degree(curve: &CurveSpec, d: usize) -> Vec<Syzygy> {
    nullspace(&syzygy_system(curve, d))
        .iter()
        .map(|v| vec_to_syzygy(v, d).normalized())
        .collect()
}

fn syz_to_vec(s: &Syzygy) -> Vec<Q> {
    s.0.iter().flat_map(|h| h.coeffs().to_vec()).collect()
}

/// Lowest-degree syzygy `p`, then the lowest-degree syzygy outside the
/// module generated by `p`.
pub fn compute_mubasis(curve: &CurveSpec) -> Result<MuBasis> {
    let n = curve.n;
    let mut p = None;
    for d in 0..=n {
        if let Some(s) = syzygies_of_degree(curve, d).into_iter().next() {
            p = Some((d, s));
            break;
        }
    }
    let (mu, p) = p.ok_or_else(|| Error::InvalidMuBasis("no syzygy up to degree n".into()))?;
    let dq = n - mu;
    let shifts: Vec<Vec<Q>> = (0..=dq - mu)
        .map(|i| {
            let m = HPoly::monomial(Q::one(), i, dq - mu);
            syz_to_vec(&Syzygy(std::array::from_fn(|k| &p.0[k] * &m)))
        })
        .collect();
    let base_rank = rank_q(&QMat::from_rows(shifts.clone())?);
    let mut q = None;
    for cand in syzygies_of_degree(curve, dq) {
        let mut rows = shifts.clone();
        rows.push(syz_to_vec(&cand));
        if rank_q(&QMat::from_rows(rows)?) > base_rank {
            q = Some(cand);
            break;
        }
    }
    let q =
        q.ok_or_else(|| Error::InvalidMuBasis(format!("no independent syzygy of degree {dq}")))?;
    let basis = MuBasis { p, q, mu };
    let (checks, _) = verify_mubasis(curve, &basis);
    if let Some(c) = checks.iter().find(|c| c.failed()) {
        return Err(Error::InvalidMuBasis(c.detail.clone()));
    }
    Ok(basis)
}

/// The three defining contracts; returns `k` with `p x q = k P` when it
/// exists.
pub fn verify_mubasis(curve: &CurveSpec, basis: &MuBasis) -> (Vec<Check>, Option<Q>) {
    let mut out = Vec::new();
    let syz_ok = basis.p.apply(curve).is_zero() && basis.q.apply(curve).is_zero();
    out.push(Check::expect(
        "mubasis-syzygy",
        syz_ok,
        "A a + B b + C c = 0 for p and q",
    ));
    let (dp, dq) = (basis.p.degree(), basis.q.degree());
    let deg_ok = dp + dq == curve.n && dp == basis.mu && dp <= dq;
    out.push(Check::expect(
        "mubasis-degree",
        deg_ok,
        format!("deg p + deg q = {dp} + {dq}, n = {}", curve.n),
    ));
    let cr = cross(&basis.p.0, &basis.q.0);
    let comps = curve.components();
    let mut k = None;
    let mut ok = deg_ok;
    if ok {
        for (x, c) in cr.iter().zip(comps) {
            if let (Some(lx), Some(lc)) = (x.leading(), c.leading()) {
                k = Some(lx / lc);
                break;
            }
        }
        ok = match &k {
            Some(kk) if !kk.is_zero() => cr.iter().zip(comps).all(|(x, c)| *x == c.scale(kk)),
            _ => false,
        };
    }
    let detail = match (&k, ok) {
        (Some(kk), true) => format!("p x q = k P with k = {}", crate::poly::format_q(kk)),
        _ => "p x q is not a nonzero multiple of P".into(),
    };
    out.push(Check::expect("mubasis-cross-product", ok, detail));
    (out, if ok { k } else { None })
}
