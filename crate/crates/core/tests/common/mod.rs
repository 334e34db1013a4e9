#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ratsing::mubasis::{check_proper, compute_mubasis, CurveSpec};
use ratsing::poly::{HPoly, UPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// Ascending coefficients with a nonzero leading entry.
pub fn upoly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> UPoly {
    let mut c = ints(rng, degree + 1, bound);
    while c[degree] == 0 {
        c[degree] = rng.gen_range(-bound..=bound);
    }
    UPoly::from_ints(&c)
}

pub fn hpoly(rng: &mut ChaCha8Rng, degree: usize, bound: i64) -> HPoly {
    HPoly::from_ints(&ints(rng, degree + 1, bound))
}

pub fn curve(a: &[i64], b: &[i64], c: &[i64]) -> CurveSpec {
    CurveSpec::new(
        HPoly::from_ints(a),
        HPoly::from_ints(b),
        HPoly::from_ints(c),
    )
    .unwrap()
}

/// Random proper curve of degree `n` with small integer coefficients,
/// redrawing degenerate or improper samples.
pub fn proper_curve(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> CurveSpec {
    loop {
        let [a, b, c] = [0; 3].map(|_| hpoly(rng, n, bound));
        let Ok(curve) = CurveSpec::new(a, b, c) else {
            continue;
        };
        let Ok(basis) = compute_mubasis(&curve) else {
            continue;
        };
        if check_proper(&curve, &basis).map_or(false, |p| p.proper) {
            return curve;
        }
    }
}

/// `(name, curve)` for the four golden instances.
pub fn goldens() -> Vec<(&'static str, CurveSpec)> {
    vec![
        ("cusp", cusp()),
        ("node", node()),
        ("conic", conic()),
        ("tacnode", tacnode()),
    ]
}

/// `(t^2 v, t^3, v^3)`
pub fn cusp() -> CurveSpec {
    curve(&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0])
}

/// `((t^2 - v^2) v, t (t^2 - v^2), v^3)`
pub fn node() -> CurveSpec {
    curve(&[-1, 0, 1, 0], &[0, -1, 0, 1], &[1, 0, 0, 0])
}

/// `(t^2, t v, v^2)`
pub fn conic() -> CurveSpec {
    curve(&[0, 0, 1], &[0, 1, 0], &[1, 0, 0])
}

/// `(t^4 - v^4, t^4 + t^2 v^2 - 2 v^4, t^4 + t^3 v - 4 t v^3 + v^4)`: a
/// tacnode at the origin (parameters t = 1, -1) and a node at
/// (15, 18, 17) (parameters t = 2, -2).
pub fn tacnode() -> CurveSpec {
    curve(&[-1, 0, 0, 0, 1], &[-2, 0, 1, 0, 1], &[1, -4, 0, 1, 1])
}
