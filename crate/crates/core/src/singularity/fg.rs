use crate::error::{Error, Result};
use crate::mubasis::{CurveSpec, MuBasis, Syzygy};
use crate::poly::{BiHPoly, HPoly};
use crate::polymat::{snf_homogeneous, HPolyMat};
use crate::resultants::bezout_matrix;

/// `F = p(s,u) . P(t,v) / (sv - tu)` and `G` likewise from `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FGPair {
    pub f: BiHPoly,
    pub g: BiHPoly,
}

/// `L(s,u) . P(t,v)` as a bihomogeneous polynomial.
pub fn moving_product(l: &Syzygy, curve: &CurveSpec) -> Result<BiHPoly> {
    let comps: Vec<HPoly> = curve.components().iter().map(|h| (*h).clone()).collect();
    let parts: Vec<(HPoly, HPoly)> =
        l.0.iter()
            .cloned()
            .zip(comps)
            .filter(|(a, _)| !a.is_zero())
            .collect();
    if parts.is_empty() {
        return Ok(BiHPoly::zero(l.degree(), curve.n));
    }
    let (f, g): (Vec<HPoly>, Vec<HPoly>) = parts.into_iter().unzip();
    BiHPoly::dot_outer(&f, &g)
}

/// `L(s,u) . P(t,v) / (sv - tu)` for a syzygy `L`.
pub fn syzygy_quotient(l: &Syzygy, curve: &CurveSpec) -> Result<BiHPoly> {
    moving_product(l, curve)?
        .divide_by_cayley()
        .map_err(|_| Error::InvalidMuBasis("moving line is not a syzygy".into()))
}

pub fn build_fg(curve: &CurveSpec, basis: &MuBasis) -> Result<FGPair> {
    Ok(FGPair {
        f: syzygy_quotient(&basis.p, curve)?,
        g: syzygy_quotient(&basis.q, curve)?,
    })
}

/// Smith form of `B_{t,v}(F, G)` together with the `d`-chain.
#[derive(Clone, Debug, PartialEq)]
pub struct MainSmith {
    pub matrix: HPolyMat,
    /// `f_1 | f_2 | ... | f_{n-1}`, forms in `(s,u)`.
    pub invariants: Vec<HPoly>,
    /// `d_2, ..., d_{n-mu}` (index 0 holds `d_2`).
    pub d_chain: Vec<HPoly>,
}

impl MainSmith {
    /// `d_k` for `k >= 2`; one outside the chain.
    pub fn d(&self, k: usize) -> HPoly {
        if k >= 2 && k - 2 < self.d_chain.len() {
            self.d_chain[k - 2].clone()
        } else {
            HPoly::one()
        }
    }

    pub fn last(&self) -> HPoly {
        self.invariants.last().cloned().unwrap_or_else(HPoly::one)
    }

    /// `sum_k (k - 1) deg d_k`
    pub fn weighted_degree(&self) -> usize {
        self.d_chain
            .iter()
            .enumerate()
            .map(|(i, d)| (i + 1) * d.degree())
            .sum()
    }
}

/// Smith form of a nonzero matrix; the empty matrix has no factors.
pub(crate) fn smith_factors(m: &HPolyMat) -> Result<Vec<HPoly>> {
    if m.rows() == 0 || m.cols() == 0 {
        return Ok(Vec::new());
    }
    if m.is_zero() {
        return Ok(vec![HPoly::zero(0); m.rows().min(m.cols())]);
    }
    Ok(snf_homogeneous(m)?.invariant_factors)
}

/// Smith form of `B_{t,v}(F, G)`, checked against the shape
/// `1, ..., 1 (mu times), d_{n-mu}, d_{n-mu} d_{n-mu-1}, ...`.
pub fn main_smith(fg: &FGPair, n: usize, mu: usize) -> Result<MainSmith> {
    let matrix = bezout_matrix(&fg.f, &fg.g)?;
    let invariants = smith_factors(&matrix)?;
    if invariants.len() != n - 1 {
        return Err(Error::Structure(format!(
            "Bezout matrix has size {}, expected {}",
            invariants.len(),
            n - 1
        )));
    }
    if invariants.iter().any(|f| f.is_zero()) {
        return Err(Error::Structure("B(F,G) is singular".into()));
    }
    if let Some(i) = invariants.iter().take(mu).position(|f| !f.is_unit()) {
        return Err(Error::Structure(format!(
            "invariant factor {} is {} but the first {mu} must be units",
            i + 1,
            invariants[i]
        )));
    }
    // d_k = f_{n+1-k} / f_{n-k} (1-based)
    let mut d_chain = Vec::new();
    for k in 2..=n - mu {
        let hi = &invariants[n - k];
        let lo = if n - k >= 1 {
            invariants[n - k - 1].clone()
        } else {
            HPoly::one()
        };
        let d = hi
            .exact_div(&lo)
            .map_err(|_| Error::Structure("invariant factors do not form a chain".into()))?;
        d_chain.push(d.normalized());
    }
    Ok(MainSmith {
        matrix,
        invariants,
        d_chain,
    })
}

/// `d^Q`: the part of `f` made of the given irreducible factors.
pub fn restrict(f: &HPoly, factors: &[HPoly]) -> HPoly {
    if f.is_zero() {
        return f.clone();
    }
    factors
        .iter()
        .fold(HPoly::one(), |acc, p| &acc * &p.pow(f.multiplicity_of(p)))
        .normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mubasis::compute_mubasis;

    #[test]
    fn cusp_main_smith() {
        let c = CurveSpec::new(
            HPoly::from_ints(&[0, 0, 1, 0]),
            HPoly::from_ints(&[0, 0, 0, 1]),
            HPoly::from_ints(&[1, 0, 0, 0]),
        )
        .unwrap();
        let b = compute_mubasis(&c).unwrap();
        let fg = build_fg(&c, &b).unwrap();
        assert_eq!(fg.f.degree_tv(), 2);
        let ms = main_smith(&fg, 3, b.mu).unwrap();
        assert_eq!(ms.invariants, vec![HPoly::one(), HPoly::x().pow(2)]);
        assert_eq!(ms.d_chain, vec![HPoly::x().pow(2)]);
        assert_eq!(ms.weighted_degree(), 2);
    }
}
