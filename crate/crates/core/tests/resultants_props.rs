mod common;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ratsing::poly::{q, BiHPoly, HPoly, UPoly, Q};
use ratsing::polymat::{rank_q, QMat};
use ratsing::resultants::{
    bezout_matrix, bezoutian, bezoutian_entry_formula, companion_h, companion_monic,
    eval_poly_at_matrix, hybrid_bezout, resultant_generic, resultant_tv, resultant_u, t_matrix,
};

/// `lead * prod (x - r)` for integer roots `r`.
fn from_roots(lead: i64, roots: &[i64]) -> UPoly {
    roots.iter().fold(UPoly::from_ints(&[lead]), |acc, &r| {
        &acc * &UPoly::from_ints(&[-r, 1])
    })
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let x = rng.gen_range(-bound..=bound);
        if x != 0 {
            return x;
        }
    }
}

#[test]
fn sylvester_resultant_matches_root_products() {
    // Res(f, g) = a^n b^m prod (r_i - s_j)
    let mut rng = common::rng(21);
    for _ in 0..60 {
        let (m, n) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (a, b) = (nonzero(&mut rng, 3), nonzero(&mut rng, 3));
        let rs = common::ints(&mut rng, m, 4);
        let ss = common::ints(&mut rng, n, 4);
        let mut expect = q(a).pow(n as i32) * q(b).pow(m as i32);
        for r in &rs {
            for s in &ss {
                expect *= q(r - s);
            }
        }
        assert_eq!(
            resultant_u(&from_roots(a, &rs), &from_roots(b, &ss)).unwrap(),
            expect
        );
    }
}

#[test]
fn both_bezoutian_constructions_agree_and_track_the_gcd() {
    let mut rng = common::rng(22);
    for _ in 0..60 {
        let m = rng.gen_range(1..=5);
        let common_roots = rng.gen_range(0..=m.min(2));
        let shared = common::ints(&mut rng, common_roots, 4);
        let mut rf = shared.clone();
        rf.extend(common::ints(&mut rng, m - common_roots, 5));
        let mut rg = shared.clone();
        rg.extend(common::ints(&mut rng, m - common_roots, 5));
        let f = from_roots(nonzero(&mut rng, 3), &rf);
        let g = from_roots(nonzero(&mut rng, 3), &rg);
        let b = bezoutian(f.coeffs(), g.coeffs()).unwrap();
        assert_eq!(b, bezoutian_entry_formula(f.coeffs(), g.coeffs()).unwrap());
        // rank deficiency of the Bezoutian is the degree of the gcd
        let gcd_deg = f.gcd(&g).degree().unwrap();
        assert_eq!(rank_q(&b), m - gcd_deg);
        let res = resultant_u(&f, &g).unwrap();
        let det = b.det().unwrap();
        assert_eq!(
            det.clone() * det.clone(),
            res.clone() * res,
            "det B = +-Res"
        );
    }
}

#[test]
fn bezout_matrix_of_forms_has_the_resultant_as_determinant() {
    let mut rng = common::rng(23);
    for _ in 0..20 {
        let pick = |rng: &mut ChaCha8Rng| {
            let mut acc = BiHPoly::zero(1, 2);
            for _ in 0..2 {
                let t = BiHPoly::outer(&common::hpoly(rng, 1, 3), &common::hpoly(rng, 2, 3));
                acc = acc.checked_add(&t).unwrap();
            }
            acc
        };
        let (f, g) = (pick(&mut rng), pick(&mut rng));
        let det = bezout_matrix(&f, &g).unwrap().det().unwrap();
        let res = resultant_tv(&f, &g).unwrap();
        assert_eq!(&det * &det, &res * &res);
        // spot values against scalar resultants
        for s0 in [-2i64, 0, 1, 3] {
            let fs = f.eval_su(&q(s0), &q(1)).unwrap();
            let gs = g.eval_su(&q(s0), &q(1)).unwrap();
            let scalar = resultant_generic(fs.coeffs(), gs.coeffs()).unwrap();
            assert_eq!(res.eval(&q(s0), &q(1)).unwrap(), scalar);
        }
    }
}

/// A random polynomial of exact degree `d` (degree 0 allowed).
fn poly_of_degree(rng: &mut ChaCha8Rng, d: usize) -> UPoly {
    common::upoly(rng, d, 4)
}

#[test]
fn cayley_hamilton_for_companion_matrices() {
    let mut rng = common::rng(24);
    for _ in 0..30 {
        let n = rng.gen_range(1..=5);
        let p = poly_of_degree(&mut rng, n);
        let c = companion_monic(&p).unwrap();
        let at = eval_poly_at_matrix(p.coeffs(), &c).unwrap();
        assert!(at.is_zero());
    }
}

#[test]
fn companion_determinant_against_roots() {
    // det Q(companion of P/p0) = prod Q(r_i) over the roots of P
    let mut rng = common::rng(25);
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let roots = common::ints(&mut rng, n, 4);
        let p = from_roots(nonzero(&mut rng, 3), &roots);
        let m = rng.gen_range(0..=n);
        let qq = poly_of_degree(&mut rng, m);
        let c = companion_monic(&p).unwrap();
        let det = eval_poly_at_matrix(qq.coeffs(), &c).unwrap().det().unwrap();
        let expect: Q = roots.iter().map(|&r| qq.eval(&q(r))).product();
        assert_eq!(det, expect);
    }
}

#[test]
fn hybrid_bezout_is_t_times_h_by_two_routes() {
    // the division-free route against T_m times the monic-companion route
    let mut rng = common::rng(26);
    for _ in 0..40 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(0..=n);
        let p = poly_of_degree(&mut rng, n);
        let qq = poly_of_degree(&mut rng, m);
        let direct = hybrid_bezout(&qq, &p).unwrap();
        let via_h = t_matrix(p.coeffs(), m)
            .unwrap()
            .mul(&companion_h(&qq, &p).unwrap())
            .unwrap();
        assert_eq!(direct, via_h);
        // the trailing n - m rows are shifted coefficient rows of Q
        let desc: Vec<Q> = qq.coeffs().iter().rev().cloned().collect();
        for r in m..n {
            for c in 0..n {
                let k = c as isize - (r - m) as isize;
                let want = if k >= 0 && (k as usize) < desc.len() {
                    desc[k as usize].clone()
                } else {
                    q(0)
                };
                assert_eq!(direct.get(r, c), &want, "row {r} col {c}");
            }
        }
    }
}

#[test]
fn hybrid_bezout_with_equal_degrees_is_a_bezoutian() {
    // for deg Q = deg P the hybrid matrix has the determinant of the
    // classical Bezoutian up to sign
    let mut rng = common::rng(27);
    for _ in 0..30 {
        let n = rng.gen_range(1..=4);
        let p = poly_of_degree(&mut rng, n);
        let qq = poly_of_degree(&mut rng, n);
        let h = hybrid_bezout(&qq, &p).unwrap().det().unwrap();
        let b = bezoutian(p.coeffs(), qq.coeffs()).unwrap().det().unwrap();
        assert_eq!(&h * &h, &b * &b);
        assert_eq!(
            rank_q(&hybrid_bezout(&qq, &p).unwrap()),
            rank_q(&bezoutian(p.coeffs(), qq.coeffs()).unwrap())
        );
    }
}

#[test]
fn zero_entries_and_dimension_errors() {
    let p = UPoly::from_ints(&[1, 0, 1]);
    assert!(hybrid_bezout(&UPoly::from_ints(&[1, 1, 1, 1]), &p).is_err());
    assert!(companion_monic(&UPoly::zero()).is_err());
    assert!(bezoutian::<Q>(&[q(1), q(2)], &[q(1)]).is_err());
    let z = HPoly::zero(2);
    assert!(ratsing::resultants::resultant_h(&z, &z).is_err());
    assert_eq!(QMat::identity(2).det().unwrap(), q(1));
}
