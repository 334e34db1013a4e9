use super::companion::hybrid_bezout_generic;
use crate::error::{Error, Result};
use crate::poly::UPoly;
use crate::polymat::{combinations, snf_univariate, PolyMat};
use crate::verify::Check;

fn mul_t(f: &[UPoly], g: &[UPoly]) -> Vec<UPoly> {
    let mut out = vec![UPoly::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

fn invariants(m: &PolyMat) -> Result<Vec<UPoly>> {
    if m.is_zero() {
        return Ok(vec![UPoly::zero(); m.rows()]);
    }
    Ok(snf_univariate(m, false)?.invariant_factors)
}

/// Divisibility of invariant factors of Hybrid Bezout matrices over
/// `Q[s]`: for `f, g, h` in `Q[s][t]` (ascending in `t`) with
/// `deg f + deg g <= deg h`, every product `alpha_i.. beta_j..` must divide
/// `h0^l gamma_{i+j-1}..` for some `l`.
///
/// The smallest working `l` is computed per tuple; the check fails only
/// beyond `k (deg f + deg g)` (the exponent produced by clearing the
/// `T_m^{-1}` denominators). The largest `l` seen is reported, flagged when
/// it exceeds `deg f + deg g`.
pub fn check_product_factor_divisibility(
    f: &[UPoly],
    g: &[UPoly],
    h: &[UPoly],
    max_k: usize,
) -> Result<Check> {
    let (m, n, d) = (f.len() - 1, g.len() - 1, h.len() - 1);
    if m + n > d {
        return Err(Error::DegreeMismatch(format!(
            "deg f + deg g = {} > deg h = {d}",
            m + n
        )));
    }
    let h0 = h.last().expect("nonempty").clone();
    if h0.is_zero() {
        return Err(Error::ZeroPolynomial("leading coefficient of h".into()));
    }
    let al = invariants(&hybrid_bezout_generic(f, h)?)?;
    let be = invariants(&hybrid_bezout_generic(g, h)?)?;
    let ga = invariants(&hybrid_bezout_generic(&mul_t(f, g), h)?)?;
    let mut max_l = 0;
    let mut tested = 0;
    for k in 1..=max_k.min(d) {
        let bound = k * (m + n);
        for is in combinations(d, k) {
            for js in combinations(d, k) {
                let idx: Vec<usize> = (0..k).map(|t| is[t] + js[t] - t).collect();
                if idx.iter().any(|&x| x >= d) {
                    continue;
                }
                let lhs = is
                    .iter()
                    .map(|&i| &al[i])
                    .chain(js.iter().map(|&j| &be[j]))
                    .fold(UPoly::one(), |acc, x| &acc * x);
                let mut rhs = idx.iter().fold(UPoly::one(), |acc, &x| &acc * &ga[x]);
                tested += 1;
                let mut l = 0;
                while !lhs.divides(&rhs) {
                    if l == bound {
                        return Ok(Check::fail(
                            "product-factor-divisibility",
                            format!("indices {is:?} {js:?}: no h0 power up to {bound} works"),
                        ));
                    }
                    rhs = &rhs * &h0;
                    l += 1;
                }
                max_l = max_l.max(l);
            }
        }
    }
    let detail = if max_l > m + n {
        format!(
            "{tested} tuples hold; largest h0 exponent {max_l} exceeds deg f + deg g = {}",
            m + n
        )
    } else {
        format!("{tested} tuples hold; largest h0 exponent {max_l}")
    };
    Ok(Check::pass("product-factor-divisibility", detail))
}
