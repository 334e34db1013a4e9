use num_traits::{One, Zero};

use super::{CurveSpec, Form3, MuBasis};
use crate::error::{Error, Result};
use crate::poly::{squarefree_part_h, UPoly, Q};
use crate::resultants::resultant_h;

fn q_usize(k: usize) -> Q {
    Q::from_integer(k.into())
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Q], ys: &[Q]) -> UPoly {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    let mut acc = UPoly::zero();
    for i in (0..n).rev() {
        acc =
            &(&acc * &UPoly::new(vec![-xs[i].clone(), Q::one()])) + &UPoly::constant(dd[i].clone());
    }
    acc
}

/// `f(x, y, w) = Res_{s,u}(p . X, q . X)`, recovered from its values on an
/// integer grid in the chart `w = 1`.
pub fn implicitize(basis: &MuBasis) -> Result<Form3> {
    let n = basis.p.degree() + basis.q.degree();
    let nodes: Vec<Q> = (0..=n).map(q_usize).collect();
    // per fixed y: polynomial in x
    let mut rows: Vec<UPoly> = Vec::with_capacity(n + 1);
    for yv in &nodes {
        let mut vals = Vec::with_capacity(n + 1);
        for xv in &nodes {
            let pt = [xv.clone(), yv.clone(), Q::one()];
            vals.push(resultant_h(
                &basis.p.dot_point(&pt),
                &basis.q.dot_point(&pt),
            )?);
        }
        rows.push(interpolate(&nodes, &vals));
    }
    let mut terms = Vec::new();
    for i in 0..=n {
        let col: Vec<Q> = rows.iter().map(|r| r.coeff(i)).collect();
        let py = interpolate(&nodes, &col);
        for (j, c) in py.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + j > n {
                return Err(Error::Structure(format!(
                    "implicit equation has a term x^{i} y^{j} beyond degree {n}"
                )));
            }
            terms.push(([i, j, n - i - j], c.clone()));
        }
    }
    let f = Form3::new(n, terms)?;
    if f.is_zero() {
        return Err(Error::InvalidMuBasis(
            "resultant of the basis vanishes identically".into(),
        ));
    }
    Ok(f.normalized())
}

const PROBE_LINES: [([i64; 3], [i64; 3]); 3] = [
    ([1, 2, 3], [2, -1, 5]),
    ([3, 1, -2], [1, 4, 1]),
    ([1, -3, 2], [-2, 1, 7]),
];

/// Degree of the reduced curve `f_red` where `f = f_red^k`: the number of
/// distinct intersections with a generic line, maximized over fixed probes.
pub fn implicit_degree(f: &Form3) -> Result<usize> {
    let mut best = 0;
    for (a, b) in PROBE_LINES {
        let qa = a.map(|x| Q::from_integer(x.into()));
        let qb = b.map(|x| Q::from_integer(x.into()));
        let r = f.restrict_to_line(&qa, &qb);
        if r.is_zero() {
            continue;
        }
        best = best.max(squarefree_part_h(&r)?.degree());
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Properness {
    pub proper: bool,
    pub degree: usize,
    pub implicit_degree: usize,
    pub implicit: Form3,
}

/// A parametrization is proper iff its implicit curve is reduced of
/// degree `n`; for a `k`-to-one map the resultant is a `k`-th power.
pub fn check_proper(curve: &CurveSpec, basis: &MuBasis) -> Result<Properness> {
    let f = implicitize(basis)?;
    let d = implicit_degree(&f)?;
    Ok(Properness {
        proper: d == curve.n,
        degree: curve.n,
        implicit_degree: d,
        implicit: f,
    })
}
