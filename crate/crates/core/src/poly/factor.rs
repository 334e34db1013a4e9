//! Squarefree decomposition and factorization over the rationals.
//!
//! Squarefree parts come from Yun's algorithm here; the splitting of a
//! squarefree integer polynomial into irreducibles is delegated to the
//! `algebraics` crate (Zassenhaus-style factorization over the integers).

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{HPoly, UPoly, Q};
use crate::error::{Error, Result};

/// `constant * prod(factor^mult)`, factors normalized and sorted by
/// `(degree, coefficients)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<P> {
    pub constant: Q,
    pub factors: Vec<(P, usize)>,
}

/// Yun's algorithm: `[(g_1, 1), (g_2, 2), ...]` with each `g_k` squarefree,
/// pairwise coprime, normalized, and `f = c * prod g_k^k`. Trivial `g_k`
/// are omitted.
pub fn squarefree_decomposition(f: &UPoly) -> Result<Vec<(UPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition".into()));
    }
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.exact_div(&a)?;
    let mut c = df.exact_div(&a)?;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while !b.is_constant() {
        a = b.gcd(&d);
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
        if !a.is_constant() {
            out.push((a.normalized(), k));
        }
        k += 1;
    }
    Ok(out)
}

pub fn squarefree_part(f: &UPoly) -> Result<UPoly> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts
        .iter()
        .fold(UPoly::one(), |acc, (g, _)| &acc * g)
        .normalized())
}

fn irreducible_factors(sqf: &UPoly) -> Vec<UPoly> {
    let ints = sqf.to_primitive_ints();
    let poly: Polynomial<BigInt> = Polynomial::from(ints);
    let fs = poly.factor();
    fs.polynomial_factors
        .into_iter()
        .map(|pf| UPoly::from_bigints(&pf.polynomial.into_coefficients()).normalized())
        .collect()
}

fn sort_factors<P, K: Ord>(v: &mut [(P, usize)], key: impl Fn(&P) -> K) {
    v.sort_by(|a, b| key(&a.0).cmp(&key(&b.0)));
}

/// Irreducible factorization of a nonzero polynomial.
pub fn factor_upoly(f: &UPoly) -> Result<Factorization<UPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("factorization".into()));
    }
    let mut factors = Vec::new();
    for (g, k) in squarefree_decomposition(f)? {
        for p in irreducible_factors(&g) {
            factors.push((p, k));
        }
    }
    sort_factors(&mut factors, |p: &UPoly| (p.deg(), p.coeffs().to_vec()));
    let prod = factors
        .iter()
        .fold(UPoly::one(), |acc, (p, k)| &acc * &p.pow(*k));
    let constant = f.leading().expect("nonzero") / prod.leading().expect("nonzero");
    Ok(Factorization { constant, factors })
}

/// Irreducible factorization of a nonzero binary form; factors of `y`
/// appear as the form `y` itself.
pub fn factor_hpoly(f: &HPoly) -> Result<Factorization<HPoly>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("factorization".into()));
    }
    let uf = factor_upoly(&f.dehom_first())?;
    let mut factors: Vec<(HPoly, usize)> = uf
        .factors
        .iter()
        .map(|(p, k)| (HPoly::homogenize_tight(p), *k))
        .collect();
    let oy = f.ord_y();
    if oy > 0 {
        factors.push((HPoly::y(), oy));
    }
    sort_factors(&mut factors, |p: &HPoly| (p.degree(), p.coeffs().to_vec()));
    let prod = factors
        .iter()
        .fold(HPoly::one(), |acc, (p, k)| &acc * &p.pow(*k));
    let constant = f.leading().expect("nonzero") / prod.leading().expect("nonzero");
    Ok(Factorization { constant, factors })
}

impl Factorization<HPoly> {
    pub fn expand(&self) -> HPoly {
        self.factors
            .iter()
            .fold(HPoly::constant(self.constant.clone()), |acc, (p, k)| {
                &acc * &p.pow(*k)
            })
    }
}

impl Factorization<UPoly> {
    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.constant.clone()), |acc, (p, k)| {
                &acc * &p.pow(*k)
            })
    }
}

/// Squarefree part of a binary form, normalized.
pub fn squarefree_part_h(f: &HPoly) -> Result<HPoly> {
    let fz = factor_hpoly(f)?;
    Ok(fz
        .factors
        .iter()
        .fold(HPoly::one(), |acc, (p, _)| &acc * p)
        .normalized())
}

/// Does `f` have a rational root? Used as an independent irreducibility
/// probe in tests (rational root theorem on the primitive integer form).
pub fn has_rational_root(f: &UPoly) -> bool {
    let ints = f.to_primitive_ints();
    if ints.len() <= 1 {
        return false;
    }
    if ints[0].is_zero() {
        return true;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let n = num_traits::Signed::abs(n);
        let mut v = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                v.push(d.clone());
                v.push(&n / &d);
            }
            d += 1;
        }
        v
    };
    let ps = divisors(&ints[0]);
    let qs = divisors(ints.last().expect("nonempty"));
    for p in &ps {
        for qq in &qs {
            for sign in [1, -1] {
                let r = Q::new(p * BigInt::from(sign), qq.clone());
                if f.eval(&r).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}
