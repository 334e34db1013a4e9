use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mubasis::CurveSpec;
use crate::poly::{HPoly, Vars, Q};
use crate::polymat::{rank_q, QMat};

pub type Mat3 = [[Q; 3]; 3];

/// A curve moved so that a singular point sits at `(0, 0, 1)`, written as
/// `(a h, b h, c)` with `gcd(a, h) = gcd(b, h) = gcd(c, h) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OriginForm {
    pub curve: CurveSpec,
    /// Rows act on `(x, y, w)` of the original plane.
    pub transform: Mat3,
    pub shear: String,
    pub h: HPoly,
    pub a: HPoly,
    pub b: HPoly,
    pub c: HPoly,
}

fn identity3() -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { Q::one() } else { Q::zero() }))
}

fn mat_mul(x: &Mat3, y: &Mat3) -> Mat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(Q::zero(), |acc, k| acc + &x[i][k] * &y[k][j]))
    })
}

fn inverse3(m: &Mat3) -> Option<Mat3> {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    let det = (0..3).fold(Q::zero(), |acc, j| acc + &m[0][j] * c(0, j));
    if det.is_zero() {
        return None;
    }
    Some(std::array::from_fn(|i| {
        std::array::from_fn(|j| c(j, i) / &det)
    }))
}

/// A transform sending `point` to `(0, 0, 1)`: the inverse of the matrix
/// whose columns are two standard basis vectors and `point`.
pub fn to_origin(point: &[Q; 3]) -> Result<Mat3> {
    let k = point
        .iter()
        .rposition(|x| !x.is_zero())
        .ok_or_else(|| Error::DegenerateCurve("the zero vector is not a point".into()))?;
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let mut cols = identity3();
    for (j, &i) in others.iter().enumerate() {
        for r in 0..3 {
            cols[r][j] = if r == i { Q::one() } else { Q::zero() };
        }
    }
    for r in 0..3 {
        cols[r][2] = point[r].clone();
    }
    inverse3(&cols)
        .ok_or_else(|| Error::Inconsistent("completion of a point to a basis is singular".into()))
}

/// Shears fixing `(0, 0, 1)` in search order: identity, then
/// `x -> x + m y` and `y -> y + m x` for `m = 1, -1, 2, -2, ...`.
fn shears(bound: usize) -> Vec<(String, Mat3)> {
    let mut out = vec![("identity".to_string(), identity3())];
    for m in 1..=bound as i64 {
        for mm in [m, -m] {
            let q = Q::from_integer(mm.into());
            let mut sx = identity3();
            sx[0][1] = q.clone();
            out.push((format!("x -> x + {mm}*y"), sx));
            let mut sy = identity3();
            sy[1][0] = q;
            out.push((format!("y -> y + {mm}*x"), sy));
        }
    }
    out
}

/// Move a rational singular point with inversion formula `h_q` to the
/// origin and split off `h`, searching shears until `gcd(a, h) = 1`.
pub fn move_to_origin(
    curve: &CurveSpec,
    point: &[Q; 3],
    h_q: &HPoly,
    bound: usize,
) -> Result<OriginForm> {
    let base = to_origin(point)?;
    let mut tried = Vec::new();
    for (name, s) in shears(bound) {
        let t = mat_mul(&s, &base);
        let moved = curve.transform(&t)?;
        let h = moved.a.gcd(&moved.b)?;
        if h != *h_q {
            return Err(Error::Inconsistent(format!(
                "common factor {} of the moved coordinates differs from the inversion formula {}",
                h.fmt_vars(Vars::TV),
                h_q.fmt_vars(Vars::TV)
            )));
        }
        let a = moved.a.exact_div(&h)?;
        let b = moved.b.exact_div(&h)?;
        let c = moved.c.clone();
        let coprime = |f: &HPoly| -> Result<bool> { Ok(f.gcd(&h)?.is_unit()) };
        if coprime(&a)? && coprime(&c)? {
            return Ok(OriginForm {
                curve: moved,
                transform: t,
                shear: name,
                h,
                a,
                b,
                c,
            });
        }
        tried.push(name);
    }
    Err(Error::SearchExhausted { bound, tried })
}

/// Result of blowing up the origin of an origin form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowUp {
    /// Common factor removed from `(a^2 h, b c, c a)`.
    pub removed: HPoly,
    /// `None` when the strict transform is a line.
    pub curve: Option<CurveSpec>,
}

pub fn blow_up(of: &OriginForm) -> Result<BlowUp> {
    let x = &(&of.a * &of.a) * &of.h;
    let y = &of.b * &of.c;
    let w = &of.c * &of.a;
    let g = HPoly::gcd_all([&x, &y, &w])?;
    let comps = [x.exact_div(&g)?, y.exact_div(&g)?, w.exact_div(&g)?];
    let rows: Vec<Vec<Q>> = comps.iter().map(|h| h.coeffs().to_vec()).collect();
    if rank_q(&QMat::from_rows(rows)?) < 3 {
        return Ok(BlowUp {
            removed: g,
            curve: None,
        });
    }
    let [x, y, w] = comps;
    Ok(BlowUp {
        removed: g,
        curve: Some(CurveSpec::new(x, y, w)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn curve(a: &[i64], b: &[i64], c: &[i64]) -> CurveSpec {
        CurveSpec::new(
            HPoly::from_ints(a),
            HPoly::from_ints(b),
            HPoly::from_ints(c),
        )
        .unwrap()
    }

    #[test]
    fn transform_sends_point_to_origin() {
        let p = [q(3), q(-2), q(5)];
        let t = to_origin(&p).unwrap();
        let img: Vec<Q> = (0..3)
            .map(|i| (0..3).fold(Q::zero(), |acc, k| acc + &t[i][k] * &p[k]))
            .collect();
        assert_eq!(img, vec![q(0), q(0), q(1)]);
        let p2 = [q(1), q(0), q(0)];
        let t2 = to_origin(&p2).unwrap();
        assert!(t2[2][0] != q(0));
    }

    #[test]
    fn cusp_origin_and_blow_up() {
        let c = curve(&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0]);
        let h = HPoly::x().pow(2);
        let of = move_to_origin(&c, &[q(0), q(0), q(1)], &h, 20).unwrap();
        assert_eq!(of.shear, "identity");
        assert_eq!(of.a, HPoly::y());
        assert_eq!(of.b, HPoly::x());
        let bu = blow_up(&of).unwrap();
        assert_eq!(bu.removed, HPoly::y().pow(2));
        let conic = bu.curve.unwrap();
        assert_eq!(conic.n, 2);
        assert_eq!(conic.a, HPoly::x().pow(2));
    }

    #[test]
    fn tangent_along_the_y_axis_needs_a_shear() {
        // (t v^2, t^2 v, v^3 + t^3): node at the origin whose branch at
        // v = 0 is tangent to x = 0
        let c = curve(&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, 0, 1]);
        let h = &HPoly::x() * &HPoly::y();
        let of = move_to_origin(&c, &[q(0), q(0), q(1)], &h, 20).unwrap();
        assert_ne!(of.shear, "identity");
        assert!(of.a.gcd(&of.h).unwrap().is_unit());
    }
}
