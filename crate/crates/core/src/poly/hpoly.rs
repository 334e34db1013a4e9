use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::upoly::owned_ops;
use super::{format_q, make_primitive, UPoly, Q};
use crate::error::{Error, Result};

/// Names for the two homogeneous variables of a binary form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vars {
    /// curve parameters `(t, v)`
    TV,
    /// Smith-form parameters `(s, u)`
    SU,
}

impl Vars {
    pub fn names(self) -> (&'static str, &'static str) {
        match self {
            Vars::TV => ("t", "v"),
            Vars::SU => ("s", "u"),
        }
    }
}

/// Binary form of fixed degree `d`.
///
/// `coeffs[i]` is the coefficient of `x^i y^(d-i)` where `(x, y)` is
/// `(t, v)` or `(s, u)` depending on context. The zero form keeps its
/// degree marker but every coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HPoly {
    degree: usize,
    coeffs: Vec<Q>,
}

impl HPoly {
    pub fn new(degree: usize, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != degree + 1 {
            return Err(Error::DegreeMismatch(format!(
                "{} coefficients for degree {degree}",
                coeffs.len()
            )));
        }
        Ok(HPoly { degree, coeffs })
    }

    /// From ascending integer coefficients; the degree is `len - 1`.
    pub fn from_ints(c: &[i64]) -> Self {
        assert!(!c.is_empty());
        HPoly {
            degree: c.len() - 1,
            coeffs: c.iter().map(|&x| super::q(x)).collect(),
        }
    }

    pub fn from_coeffs(c: Vec<Q>) -> Self {
        assert!(!c.is_empty());
        HPoly {
            degree: c.len() - 1,
            coeffs: c,
        }
    }

    pub fn zero(degree: usize) -> Self {
        HPoly {
            degree,
            coeffs: vec![Q::zero(); degree + 1],
        }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        HPoly {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// `c * x^i * y^(d-i)`
    pub fn monomial(c: Q, i: usize, d: usize) -> Self {
        let mut h = Self::zero(d);
        h.coeffs[i] = c;
        h
    }

    /// The first variable `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// The second variable `y`.
    pub fn y() -> Self {
        Self::from_ints(&[1, 0])
    }

    /// The linear form `a*x + b*y`.
    pub fn linear(a: Q, b: Q) -> Self {
        Self::from_coeffs(vec![b, a])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.degree == 0 && !self.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.coeffs[0].is_one()
    }

    /// Homogenize `f` at degree `d`, i.e. `y^d f(x/y)`.
    pub fn homogenize(f: &UPoly, d: usize) -> Result<Self> {
        if let Some(k) = f.degree() {
            if k > d {
                return Err(Error::DegreeMismatch(format!(
                    "cannot homogenize degree {k} at degree {d}"
                )));
            }
        }
        let mut c = f.coeffs().to_vec();
        c.resize(d + 1, Q::zero());
        Ok(HPoly {
            degree: d,
            coeffs: c,
        })
    }

    /// Homogenize at the polynomial's own degree.
    pub fn homogenize_tight(f: &UPoly) -> Self {
        Self::homogenize(f, f.deg()).expect("own degree")
    }

    /// Homogenize a polynomial given in the second chart `f(1, y)`.
    pub fn homogenize_second(f: &UPoly, d: usize) -> Result<Self> {
        let h = Self::homogenize(f, d)?;
        Ok(h.swap_vars())
    }

    /// `f(x, 1)`
    pub fn dehom_first(&self) -> UPoly {
        UPoly::new(self.coeffs.clone())
    }

    /// `f(1, y)`, ascending in `y`.
    pub fn dehom_second(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Exponent of the largest power of `y` dividing `self` (zero form: its degree).
    pub fn ord_y(&self) -> usize {
        match self.dehom_first().degree() {
            Some(k) => self.degree - k,
            None => self.degree,
        }
    }

    /// Exponent of the largest power of `x` dividing `self`.
    pub fn ord_x(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.degree)
    }

    /// `f(y, x)`
    pub fn swap_vars(&self) -> Self {
        HPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        }
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Result<Q> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(self.eval_unchecked(x, y))
    }

    pub(crate) fn eval_unchecked(&self, x: &Q, y: &Q) -> Q {
        let mut total = Q::zero();
        let mut xp = Q::one();
        let ypows = pows(y, self.degree);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                total += c * &xp * &ypows[self.degree - i];
            }
            xp *= x;
        }
        total
    }

    pub fn scale(&self, c: &Q) -> Self {
        HPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of two forms; zero forms of any degree are neutral.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&Q, &Q) -> Q) -> Result<Self> {
        if self.degree != other.degree {
            if other.is_zero() {
                return Ok(self.clone());
            }
            if self.is_zero() {
                return Ok(HPoly {
                    degree: other.degree,
                    coeffs: other.coeffs.iter().map(|c| op(&Q::zero(), c)).collect(),
                });
            }
            return Err(Error::DegreeMismatch(format!(
                "adding forms of degree {} and {}",
                self.degree, other.degree
            )));
        }
        Ok(HPoly {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    /// Index of the highest `x`-power with nonzero coefficient.
    fn lead_index(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Q> {
        self.lead_index().map(|i| &self.coeffs[i])
    }

    /// Primitive integer representative, positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let mut h = self.clone();
        if let Some(i) = h.lead_index() {
            make_primitive(&mut h.coeffs, i);
        }
        h
    }

    pub fn is_normalized(&self) -> bool {
        self.is_zero() || *self == self.normalized()
    }

    pub fn exact_div(&self, g: &Self) -> Result<Self> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial("divisor".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.degree.saturating_sub(g.degree)));
        }
        if g.degree > self.degree {
            return Err(Error::InexactDivision(format!("({self}) / ({g})")));
        }
        let d = self.degree - g.degree;
        let q1 = self
            .dehom_first()
            .exact_div(&g.dehom_first())
            .map_err(|_| Error::InexactDivision(format!("({self}) / ({g})")))?;
        let quo = Self::homogenize(&q1, d)
            .map_err(|_| Error::InexactDivision(format!("({self}) / ({g})")))?;
        if &quo * g != *self {
            return Err(Error::InexactDivision(format!("({self}) / ({g})")));
        }
        Ok(quo)
    }

    pub fn divides(&self, f: &Self) -> bool {
        if self.is_zero() {
            return f.is_zero();
        }
        f.exact_div(self).is_ok()
    }

    /// Normalized gcd; an error only when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(Error::ZeroPolynomial("gcd of two zero forms".into())),
            (true, false) => Ok(other.normalized()),
            (false, true) => Ok(self.normalized()),
            (false, false) => {
                let g1 = self.dehom_first().gcd(&other.dehom_first());
                let k = self.ord_y().min(other.ord_y());
                let g = &Self::homogenize_tight(&g1) * &Self::y().pow(k);
                Ok(g.normalized())
            }
        }
    }

    pub fn gcd_all<'a>(items: impl IntoIterator<Item = &'a HPoly>) -> Result<Self> {
        let mut acc: Option<HPoly> = None;
        for f in items {
            acc = Some(match acc {
                None => f.clone(),
                Some(a) => {
                    if a.is_zero() && f.is_zero() {
                        a
                    } else {
                        a.gcd(f)?
                    }
                }
            });
        }
        match acc {
            Some(a) if !a.is_zero() => Ok(a.normalized()),
            _ => Err(Error::ZeroPolynomial("gcd of zero forms".into())),
        }
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.degree + other.degree));
        }
        let g = self.gcd(other)?;
        Ok((self * &other.exact_div(&g)?).normalized())
    }

    /// Largest `k` with `p^k | self` (`self` nonzero, `p` not a unit).
    pub fn multiplicity_of(&self, p: &Self) -> usize {
        if self.is_zero() || p.degree == 0 {
            return 0;
        }
        let mut f = self.clone();
        let mut k = 0;
        while let Ok(q) = f.exact_div(p) {
            f = q;
            k += 1;
        }
        k
    }

    /// `f(a x + b y, c x + d y)`
    pub fn substitute_linear(&self, a: &Q, b: &Q, c: &Q, d: &Q) -> Self {
        let lx = Self::linear(a.clone(), b.clone());
        let ly = Self::linear(c.clone(), d.clone());
        let xp: Vec<HPoly> = (0..=self.degree).map(|i| lx.pow(i)).collect();
        let yp: Vec<HPoly> = (0..=self.degree).map(|i| ly.pow(i)).collect();
        let mut acc = Self::zero(self.degree);
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            acc = &acc + &(&xp[i] * &yp[self.degree - i]).scale(ci);
        }
        acc
    }

    /// `f(g0, g1)` for forms `g0`, `g1` of equal degree.
    pub fn compose(&self, g0: &Self, g1: &Self) -> Result<Self> {
        if g0.degree != g1.degree && !g0.is_zero() && !g1.is_zero() {
            return Err(Error::DegreeMismatch("compose arguments".into()));
        }
        let e = g0.degree.max(g1.degree);
        let mut acc = Self::zero(self.degree * e);
        let p0: Vec<HPoly> = (0..=self.degree).map(|i| g0.pow(i)).collect();
        let p1: Vec<HPoly> = (0..=self.degree).map(|i| g1.pow(i)).collect();
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            acc = acc.checked_add(&(&p0[i] * &p1[self.degree - i]).scale(ci))?;
        }
        Ok(acc)
    }

    pub fn fmt_vars(&self, vars: Vars) -> String {
        let (x, y) = vars.names();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            push_term(&mut out, c, &[(x, i), (y, self.degree - i)]);
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

fn pows(x: &Q, n: usize) -> Vec<Q> {
    let mut v = Vec::with_capacity(n + 1);
    let mut acc = Q::one();
    for _ in 0..=n {
        v.push(acc.clone());
        acc *= x;
    }
    v
}

/// Append `c * prod(var^exp)` to a sum being printed in canonical form.
pub(crate) fn push_term(out: &mut String, c: &Q, vars: &[(&str, usize)]) {
    let mono: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    let neg = c.is_negative();
    let a = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&format_q(&a));
    } else {
        if !a.is_one() {
            out.push_str(&format_q(&a));
            out.push('*');
        }
        out.push_str(&mono.join("*"));
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_vars(Vars::TV))
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPoly[{}]({self})", self.degree)
    }
}

impl<'a> Add<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        self.checked_add(rhs).expect("homogeneous degree mismatch")
    }
}

impl<'a> Sub<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self.checked_sub(rhs).expect("homogeneous degree mismatch")
    }
}

impl<'a> Mul<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        let mut out = vec![Q::zero(); self.degree + rhs.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        HPoly {
            degree: self.degree + rhs.degree,
            coeffs: out,
        }
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

owned_ops!(HPoly);
