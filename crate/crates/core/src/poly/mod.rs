//! Exact polynomial arithmetic over the rationals.
//!
//! Three polynomial shapes are used throughout the crate:
//!
//! * [`UPoly`]: univariate, used for dehomogenized charts.
//! * [`HPoly`]: a binary form in `(t:v)` or `(s:u)`.
//! * [`BiHPoly`]: bihomogeneous in `(s,u;t,v)`.
//!
//! All of them normalize "up to a constant" results to a canonical
//! representative: integer coefficients with content one and a positive
//! leading coefficient.

mod bihpoly;
mod factor;
mod hpoly;
pub mod parse;
mod roots;
mod upoly;

pub use bihpoly::BiHPoly;
pub use factor::{
    factor_hpoly, factor_upoly, has_rational_root, squarefree_decomposition, squarefree_part,
    squarefree_part_h, Factorization,
};
pub(crate) use hpoly::push_term;
pub use hpoly::{HPoly, Vars};
pub use roots::{isolate_real_roots, sturm_sequence, Interval};
pub use upoly::UPoly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number.
pub type Q = BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `n/d`; panics on a zero denominator.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical `p/q` text (just `p` when the denominator is one).
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `p`, `-p`, or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// The positive rational `c` such that `coeffs / c` has coprime integer
/// entries. Returns one for an all-zero slice.
pub fn content(coeffs: &[Q]) -> Q {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        Q::one()
    } else {
        Q::new(num, den)
    }
}

/// Divide every entry by `content`, then flip signs so that `lead` (an
/// index into the slice) is positive.
pub fn make_primitive(coeffs: &mut [Q], lead: usize) {
    let c = content(coeffs);
    let flip = coeffs[lead].is_negative();
    for x in coeffs.iter_mut() {
        *x = &*x / &c;
        if flip {
            *x = -&*x;
        }
    }
}
