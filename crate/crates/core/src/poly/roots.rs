use num_traits::{One, Signed, Zero};

use super::{UPoly, Q};
use crate::error::{Error, Result};

/// Closed interval with rational endpoints holding exactly one real root.
/// A degenerate interval `lo == hi` is an exact rational root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn contains(&self, x: &Q) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// `f, f', -rem(f, f'), ...`
pub fn sturm_sequence(f: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = -seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r);
    }
    seq
}

fn variations(seq: &[UPoly], x: &Q) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Isolating intervals for all real roots of a squarefree polynomial,
/// in increasing order.
pub fn isolate_real_roots(f: &UPoly) -> Result<Vec<Interval>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("root isolation".into()));
    }
    if !f.gcd(&f.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let lc = f.leading().expect("nonzero").abs();
    let bound = Q::one()
        + f.coeffs()
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Q::zero);
    let seq = sturm_sequence(f);
    let mut out = Vec::new();
    // roots in (lo, hi] number V(lo) - V(hi)
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = variations(&seq, &lo) - variations(&seq, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(isolate_one(f, &seq, lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / Q::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    for k in 1..out.len() {
        while out[k].lo <= out[k - 1].hi {
            let j = if out[k].lo < out[k].hi { k } else { k - 1 };
            out[j] = bisect(f, &seq, &out[j]);
        }
    }
    Ok(out)
}

/// Halve an interval, keeping the half with the root.
fn bisect(f: &UPoly, seq: &[UPoly], iv: &Interval) -> Interval {
    let Interval { lo, hi } = iv.clone();
    let mid = (&lo + &hi) / Q::from_integer(2.into());
    if f.eval(&mid).is_zero() {
        Interval {
            lo: mid.clone(),
            hi: mid,
        }
    } else if variations(seq, &lo) - variations(seq, &mid) == 1 {
        Interval { lo, hi: mid }
    } else {
        Interval { lo: mid, hi }
    }
}

/// Tighten `(lo, hi]` with one root so the closed interval excludes `lo`.
fn isolate_one(f: &UPoly, seq: &[UPoly], mut lo: Q, hi: Q) -> Interval {
    if f.eval(&hi).is_zero() {
        return Interval { lo: hi.clone(), hi };
    }
    while f.eval(&lo).is_zero() {
        let mid = (&lo + &hi) / Q::from_integer(2.into());
        if variations(seq, &lo) - variations(seq, &mid) == 1 {
            if f.eval(&mid).is_zero() {
                return Interval {
                    lo: mid.clone(),
                    hi: mid,
                };
            }
            return Interval { lo, hi: mid };
        }
        lo = mid;
    }
    Interval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    #[test]
    fn sqrt_two() {
        let iv = isolate_real_roots(&UPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(iv.len(), 2);
        for i in &iv {
            assert!(i.lo < i.hi);
            let sq = |x: &Q| x * x - q(2);
            assert!(sq(&i.lo) * sq(&i.hi) < Q::zero());
        }
        assert!(isolate_real_roots(&UPoly::from_ints(&[1, 0, 1]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn three_integers() {
        let f = &(&UPoly::from_ints(&[-1, 1]) * &UPoly::from_ints(&[-2, 1]))
            * &UPoly::from_ints(&[-3, 1]);
        let iv = isolate_real_roots(&f).unwrap();
        assert_eq!(iv.len(), 3);
        for (i, r) in iv.iter().zip([1, 2, 3]) {
            assert!(i.contains(&q(r)));
        }
        assert!(iv[0].hi < iv[1].lo && iv[1].hi < iv[2].lo);
    }

    #[test]
    fn rejects_repeated_roots() {
        assert_eq!(
            isolate_real_roots(&UPoly::from_ints(&[1, -2, 1])),
            Err(Error::NotSquarefree)
        );
    }
}
