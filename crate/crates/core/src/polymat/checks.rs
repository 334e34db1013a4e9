use super::matrix::{rank_q, HPolyMat, PolyMat};
use super::minors::combinations;
use super::snf::{snf_homogeneous, snf_univariate};
use crate::error::{Error, Result};
use crate::poly::{BiHPoly, HPoly, UPoly, Q};
use crate::resultants::bezout_matrix;
use crate::verify::Check;

/// Exact rank of `A` evaluated at `(x, y)`.
pub fn rank_at(a: &HPolyMat, x: &Q, y: &Q) -> Result<usize> {
    Ok(rank_q(&a.eval_at(x, y)?))
}

/// For square nonsingular `A`, `B` with invariant factors `alpha`, `beta`
/// and `gamma` for `AB`: every product `alpha_i1..alpha_ik * beta_j1..beta_jk`
/// divides `gamma_{i1+j1-1} .. gamma_{ik+jk-k}` (1-based, increasing index
/// tuples). Tuples are enumerated up to length `max_k`.
pub fn check_product_divisibility(a: &PolyMat, b: &PolyMat, max_k: usize) -> Result<Check> {
    let n = a.rows();
    if !a.is_square() || !b.is_square() || b.rows() != n {
        return Err(Error::Dimension(
            "product check needs equal square matrices".into(),
        ));
    }
    if a.det()?.is_zero() || b.det()?.is_zero() {
        return Err(Error::SingularMatrix("product check".into()));
    }
    let al = snf_univariate(a, false)?.invariant_factors;
    let be = snf_univariate(b, false)?.invariant_factors;
    let ga = snf_univariate(&a.mul(b)?, false)?.invariant_factors;
    let mut tested = 0usize;
    for k in 1..=max_k.min(n) {
        for is in combinations(n, k) {
            for js in combinations(n, k) {
                let idx: Vec<usize> = (0..k).map(|t| is[t] + js[t] - t).collect();
                if idx.iter().any(|&x| x >= n) {
                    continue;
                }
                let lhs = is
                    .iter()
                    .map(|&i| &al[i])
                    .chain(js.iter().map(|&j| &be[j]))
                    .fold(UPoly::one(), |acc, f| &acc * f);
                let rhs = idx.iter().fold(UPoly::one(), |acc, &x| &acc * &ga[x]);
                tested += 1;
                if !lhs.divides(&rhs) {
                    return Ok(Check::fail(
                        "product-divisibility",
                        format!("indices {is:?} {js:?}: {lhs} does not divide {rhs}"),
                    ));
                }
            }
        }
    }
    Ok(Check::pass(
        "product-divisibility",
        format!("{tested} index tuples hold"),
    ))
}

/// The Bezout matrix of `(sv - tu)F, (sv - tu)G` has the Smith form of
/// `B(F, G)` with one extra zero.
pub fn check_cayley_padding(f: &BiHPoly, g: &BiHPoly) -> Result<Check> {
    if f.degree_tv() != g.degree_tv() {
        return Err(Error::DegreeMismatch(
            "F and G need equal (t,v)-degree".into(),
        ));
    }
    let c = BiHPoly::cayley();
    let b0 = bezout_matrix(f, g)?;
    let b1 = bezout_matrix(&(&c * f), &(&c * g))?;
    let s1 = if b1.is_zero() {
        vec![HPoly::zero(0); b1.rows()]
    } else {
        snf_homogeneous(&b1)?.invariant_factors
    };
    let mut expect = if b0.rows() == 0 || b0.is_zero() {
        vec![HPoly::zero(0); b0.rows()]
    } else {
        snf_homogeneous(&b0)?.invariant_factors
    };
    expect.push(HPoly::zero(0));
    let same = s1.len() == expect.len()
        && s1
            .iter()
            .zip(&expect)
            .all(|(x, y)| (x.is_zero() && y.is_zero()) || x == y);
    Ok(Check::expect(
        "cayley-padding",
        same,
        format!("padded rank {} vs {}", rank_of(&s1), rank_of(&expect)),
    ))
}

fn rank_of(f: &[HPoly]) -> usize {
    f.iter().filter(|x| !x.is_zero()).count()
}
