//! Minimal commutative-ring abstraction so matrices, determinants and
//! Bezoutians can be written once for rationals, polynomials and forms.

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::poly::{HPoly, UPoly, Q};

pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = q * d`, or `None` when `d` does not divide.
    fn div_exact(&self, d: &Self) -> Option<Self>;
    fn from_q(c: &Q) -> Self;
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if Zero::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }
    fn from_q(c: &Q) -> Self {
        c.clone()
    }
}

impl Ring for UPoly {
    fn zero() -> Self {
        UPoly::zero()
    }
    fn one() -> Self {
        UPoly::one()
    }
    fn is_zero(&self) -> bool {
        UPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.exact_div(d).ok()
    }
    fn from_q(c: &Q) -> Self {
        UPoly::constant(c.clone())
    }
}

impl Ring for HPoly {
    fn zero() -> Self {
        HPoly::zero(0)
    }
    fn one() -> Self {
        HPoly::one()
    }
    fn is_zero(&self) -> bool {
        HPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.exact_div(d).ok()
    }
    fn from_q(c: &Q) -> Self {
        HPoly::constant(c.clone())
    }
}
