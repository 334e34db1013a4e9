use std::collections::BTreeMap;

use num_traits::Zero;

use super::fg::{restrict, MainSmith};
use crate::error::{Error, Result};
use crate::mubasis::{CurveSpec, MuBasis};
use crate::poly::{factor_hpoly, format_q, make_primitive, HPoly, UPoly, Q};
use crate::polymat::rank_at;

/// Where a class of singular parameters lands on the curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// A single point with rational coordinates.
    Rational([Q; 3]),
    /// Conjugate points behind one irreducible factor.
    Conjugate,
}

/// A singular point (or a conjugacy class of them) read off the Smith
/// form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    /// Irreducible parameter factors, normalized and sorted.
    pub factors: Vec<HPoly>,
    pub location: Location,
    pub order: usize,
    /// Inversion formula: `gcd(p . Q, q . Q)` for a rational point, the
    /// factor's share of `d_r` for a conjugate class.
    pub formula: HPoly,
}

impl PointClass {
    pub fn point(&self) -> Option<&[Q; 3]> {
        match &self.location {
            Location::Rational(p) => Some(p),
            Location::Conjugate => None,
        }
    }

    /// Rational parameter values `(s0 : u0)` among the factors.
    pub fn rational_params(&self) -> Vec<(Q, Q)> {
        self.factors
            .iter()
            .filter(|f| f.degree() == 1)
            .map(linear_root)
            .collect()
    }
}

/// Root of `c1 x + c0 y`.
pub fn linear_root(f: &HPoly) -> (Q, Q) {
    (-f.coeff(0).clone(), f.coeff(1).clone())
}

/// Coprime integer coordinates with the last nonzero one positive.
pub fn normalize_point(mut p: [Q; 3]) -> [Q; 3] {
    if let Some(k) = p.iter().rposition(|x| !x.is_zero()) {
        make_primitive(&mut p, k);
    }
    p
}

pub fn fmt_point(p: &[Q; 3]) -> String {
    format!(
        "({}, {}, {})",
        format_q(&p[0]),
        format_q(&p[1]),
        format_q(&p[2])
    )
}

/// Image of the roots of an irreducible `phi`: a rational point when
/// `(a, b, c) mod phi` spans a rational line, otherwise `None`.
pub fn locate(curve: &CurveSpec, phi: &HPoly) -> Result<Option<[Q; 3]>> {
    if phi.degree() == 1 {
        let (s0, u0) = linear_root(phi);
        return Ok(Some(normalize_point(curve.point_at(&s0, &u0)?)));
    }
    let m = phi.dehom_first();
    let rems: Vec<UPoly> = curve
        .components()
        .iter()
        .map(|h| h.dehom_first().rem(&m))
        .collect();
    let g = rems
        .iter()
        .find(|r| !r.is_zero())
        .ok_or_else(|| Error::Inconsistent("curve components all vanish at a parameter".into()))?
        .clone();
    let glc = g.leading().expect("nonzero").clone();
    let mut coords = Vec::with_capacity(3);
    for r in &rems {
        if r.is_zero() {
            coords.push(Q::zero());
            continue;
        }
        let lam = r.leading().expect("nonzero") / &glc;
        if *r != g.scale(&lam) {
            return Ok(None);
        }
        coords.push(lam);
    }
    Ok(Some(normalize_point([
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
    ])))
}

/// Largest `k` with `phi | d_k`.
fn max_order(ms: &MainSmith, factors: &[HPoly]) -> usize {
    (2..ms.d_chain.len() + 2)
        .filter(|&k| factors.iter().any(|f| f.divides(&ms.d(k))))
        .max()
        .unwrap_or(0)
}

/// Inversion formula `gcd(p . Q, q . Q)` of a rational point.
pub fn inversion_formula(basis: &MuBasis, point: &[Q; 3]) -> Result<HPoly> {
    basis.p.dot_point(point).gcd(&basis.q.dot_point(point))
}

/// Singular points from the factors of the last invariant factor, with
/// their orders computed from the `d`-chain and cross-checked against the
/// inversion-formula degree, the trailing divisibility count and, at
/// rational parameters, the rank of `B(F, G)`.
pub fn singular_points(
    curve: &CurveSpec,
    basis: &MuBasis,
    ms: &MainSmith,
) -> Result<Vec<PointClass>> {
    let last = ms.last();
    if last.degree() == 0 {
        return Ok(Vec::new());
    }
    let n = curve.n;
    let mut rational: BTreeMap<Vec<String>, ([Q; 3], Vec<HPoly>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (phi, _) in factor_hpoly(&last)?.factors {
        match locate(curve, &phi)? {
            Some(pt) => {
                let key = pt.iter().map(format_q).collect();
                rational
                    .entry(key)
                    .or_insert_with(|| (pt, Vec::new()))
                    .1
                    .push(phi);
            }
            None => {
                let order = max_order(ms, std::slice::from_ref(&phi));
                let formula = restrict(&ms.d(order), std::slice::from_ref(&phi));
                out.push(PointClass {
                    factors: vec![phi],
                    location: Location::Conjugate,
                    order,
                    formula,
                });
            }
        }
    }
    for (_, (pt, factors)) in rational {
        let h = inversion_formula(basis, &pt)?;
        let mut hf: Vec<HPoly> = factor_hpoly(&h)?
            .factors
            .into_iter()
            .map(|(p, _)| p)
            .collect();
        hf.sort_by_key(|p| (p.degree(), p.coeffs().to_vec()));
        if hf != factors {
            return Err(Error::Inconsistent(format!(
                "point {}: inversion formula {h} does not match the Smith-form factors",
                fmt_point(&pt)
            )));
        }
        let r_max = max_order(ms, &factors);
        let r_deg = h.degree();
        let trail = ms
            .invariants
            .iter()
            .rev()
            .take_while(|f| h.divides(f))
            .count();
        if r_max != r_deg || trail + 1 != r_deg {
            return Err(Error::Inconsistent(format!(
                "point {}: order {r_max} from the d-chain, {r_deg} from the inversion formula, {} from trailing factors",
                fmt_point(&pt),
                trail + 1
            )));
        }
        let probe = PointClass {
            factors: factors.clone(),
            location: Location::Rational(pt.clone()),
            order: r_deg,
            formula: h,
        };
        for (s0, u0) in probe.rational_params() {
            let rk = rank_at(&ms.matrix, &s0, &u0)?;
            if rk + r_deg != n {
                return Err(Error::Inconsistent(format!(
                    "point {}: rank {rk} of B(F,G) at ({}:{}) but order {r_deg}",
                    fmt_point(&pt),
                    format_q(&s0),
                    format_q(&u0)
                )));
            }
        }
        out.push(probe);
    }
    sort_classes(&mut out);
    Ok(out)
}

pub(crate) fn sort_classes(v: &mut [PointClass]) {
    v.sort_by(|a, b| {
        b.order
            .cmp(&a.order)
            .then_with(|| a.formula.degree().cmp(&b.formula.degree()))
            .then_with(|| a.formula.coeffs().cmp(b.formula.coeffs()))
    });
}
