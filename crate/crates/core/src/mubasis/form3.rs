use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{make_primitive, HPoly, Q};

/// A ternary form in `(x, y, w)`; keys are exponent triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form3 {
    degree: usize,
    terms: BTreeMap<[usize; 3], Q>,
}

impl Form3 {
    pub fn zero(degree: usize) -> Self {
        Form3 {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn new(degree: usize, terms: impl IntoIterator<Item = ([usize; 3], Q)>) -> Result<Self> {
        let mut f = Form3::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<usize>() != degree {
                return Err(Error::DegreeMismatch(format!(
                    "monomial {e:?} in a degree {degree} form"
                )));
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    pub fn from_ints(degree: usize, terms: &[([usize; 3], i64)]) -> Result<Self> {
        Form3::new(
            degree,
            terms
                .iter()
                .map(|(e, c)| (*e, Q::from_integer((*c).into()))),
        )
    }

    fn add_term(&mut self, e: [usize; 3], c: Q) {
        let slot = self.terms.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize; 3], &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [usize; 3]) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, p: &[Q; 3]) -> Q {
        self.terms.iter().fold(Q::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for k in 0..3 {
                for _ in 0..e[k] {
                    t *= &p[k];
                }
            }
            acc + t
        })
    }

    /// Partial derivative in variable `k` (0 = x, 1 = y, 2 = w).
    pub fn partial(&self, k: usize) -> Form3 {
        let mut out = Form3::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[k] > 0 {
                let mut e2 = *e;
                e2[k] -= 1;
                out.add_term(e2, c * Q::from_integer(e[k].into()));
            }
        }
        out
    }

    /// `f(a, b, c)` for forms of a common degree.
    pub fn compose(&self, a: &HPoly, b: &HPoly, c: &HPoly) -> HPoly {
        let d = a.degree();
        let mut acc = HPoly::zero(d * self.degree);
        for (e, coef) in &self.terms {
            let m = &(&a.pow(e[0]) * &b.pow(e[1])) * &c.pow(e[2]);
            acc = &acc + &m.scale(coef);
        }
        acc
    }

    /// Content removed, leading coefficient (largest key) positive.
    pub fn normalized(&self) -> Form3 {
        let keys: Vec<[usize; 3]> = self.terms.keys().copied().collect();
        let mut vals: Vec<Q> = self.terms.values().cloned().collect();
        if vals.is_empty() {
            return self.clone();
        }
        let lead = vals.len() - 1;
        make_primitive(&mut vals, lead);
        Form3 {
            degree: self.degree,
            terms: keys.into_iter().zip(vals).collect(),
        }
    }

    /// Multiplicity at a projective point: the least order of a partial
    /// derivative that does not vanish there.
    pub fn multiplicity_at(&self, p: &[Q; 3]) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut layer = vec![self.clone()];
        for order in 0..=self.degree {
            if layer.iter().any(|g| !g.eval(p).is_zero()) {
                return order;
            }
            let mut next: Vec<Form3> = Vec::new();
            for g in &layer {
                for k in 0..3 {
                    let d = g.partial(k);
                    if !d.is_zero() && !next.contains(&d) {
                        next.push(d);
                    }
                }
            }
            layer = next;
        }
        self.degree
    }

    /// Substitute a line `X = l A + m B`, giving a binary form in `(l, m)`.
    pub fn restrict_to_line(&self, a: &[Q; 3], b: &[Q; 3]) -> HPoly {
        let lin = |k: usize| HPoly::linear(a[k].clone(), b[k].clone());
        self.compose(&lin(0), &lin(1), &lin(2))
    }

    pub fn one_at(e: [usize; 3]) -> Form3 {
        let mut f = Form3::zero(e.iter().sum());
        f.add_term(e, Q::one());
        f
    }
}

impl fmt::Display for Form3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            crate::poly::push_term(&mut out, c, &[("x", e[0]), ("y", e[1]), ("w", e[2])]);
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    #[test]
    fn cusp_form_multiplicity() {
        let f = Form3::from_ints(3, &[([3, 0, 0], 1), ([0, 2, 1], -1)]).unwrap();
        assert_eq!(f.multiplicity_at(&[q(0), q(0), q(1)]), 2);
        assert_eq!(f.multiplicity_at(&[q(1), q(1), q(1)]), 1);
        assert_eq!(f.multiplicity_at(&[q(1), q(0), q(1)]), 0);
        assert_eq!(f.to_string(), "x^3 - y^2*w");
    }
}
