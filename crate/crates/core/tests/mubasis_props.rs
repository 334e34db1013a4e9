mod common;

use rand::Rng;

use ratsing::mubasis::{
    check_proper, compute_mubasis, cross, implicitize, syzygies_of_degree, verify_mubasis,
    CurveSpec,
};
use ratsing::poly::{q, HPoly, Q};
use ratsing::resultants::resultant_h;

fn random_curve(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> CurveSpec {
    loop {
        let [a, b, c] = [0; 3].map(|_| common::hpoly(rng, n, 3));
        if let Ok(curve) = CurveSpec::new(a, b, c) {
            return curve;
        }
    }
}

#[test]
fn bases_satisfy_all_three_contracts() {
    let mut rng = common::rng(31);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let c = random_curve(&mut rng, n);
        let b = compute_mubasis(&c).unwrap();
        let (checks, k) = verify_mubasis(&c, &b);
        assert!(checks.iter().all(|x| !x.failed()), "{checks:?}");
        let k = k.expect("p x q is a multiple of P");
        let cr = cross(&b.p.0, &b.q.0);
        for (x, comp) in cr.iter().zip(c.components()) {
            assert_eq!(*x, comp.scale(&k));
        }
        assert!(2 * b.mu <= n);
    }
}

#[test]
fn syzygy_dimensions_follow_the_free_module_count() {
    // a free module on generators of degrees mu and n - mu has
    // (d - mu + 1)^+ + (d - n + mu + 1)^+ independent elements of degree d
    let mut rng = common::rng(32);
    for _ in 0..30 {
        let n = rng.gen_range(2..=5);
        let c = random_curve(&mut rng, n);
        let mu = compute_mubasis(&c).unwrap().mu;
        for d in 0..=n + 1 {
            let pos = |x: isize| x.max(0) as usize;
            let expect =
                pos(d as isize - mu as isize + 1) + pos(d as isize - (n - mu) as isize + 1);
            assert_eq!(
                syzygies_of_degree(&c, d).len(),
                expect,
                "n = {n}, mu = {mu}, d = {d}"
            );
        }
    }
}

#[test]
fn generic_curves_have_balanced_bases() {
    let mut rng = common::rng(33);
    for _ in 0..20 {
        let n = rng.gen_range(2..=6);
        let c = common::proper_curve(&mut rng, n, 5);
        assert_eq!(compute_mubasis(&c).unwrap().mu, n / 2);
    }
}

#[test]
fn implicit_equation_matches_a_sylvester_elimination() {
    // for a proper curve, Res_t(a - x c, b - y c) is a constant multiple of
    // f(x, y, 1); the constant is fixed by one grid point
    let mut rng = common::rng(34);
    for _ in 0..15 {
        let n = rng.gen_range(2..=5);
        let c = common::proper_curve(&mut rng, n, 3);
        let b = compute_mubasis(&c).unwrap();
        let f = implicitize(&b).unwrap();
        assert_eq!(f.degree(), n);
        assert!(f.compose(&c.a, &c.b, &c.c).is_zero());
        let mut ratio: Option<Q> = None;
        for x in -2..=2i64 {
            for y in -2..=2i64 {
                let ex = c.a.checked_sub(&c.c.scale(&q(x))).unwrap();
                let ey = c.b.checked_sub(&c.c.scale(&q(y))).unwrap();
                let r = resultant_h(&ex, &ey).unwrap();
                let v = f.eval(&[q(x), q(y), q(1)]);
                match (&ratio, v == q(0)) {
                    (_, true) => assert_eq!(r, q(0)),
                    (None, false) => ratio = Some(&r / &v),
                    (Some(k), false) => assert_eq!(r, k * &v),
                }
            }
        }
        assert!(ratio.map_or(false, |k| k != q(0)));
    }
}

#[test]
fn composing_with_a_double_cover_is_improper() {
    let mut rng = common::rng(35);
    for _ in 0..8 {
        let n = rng.gen_range(2..=3);
        let c = common::proper_curve(&mut rng, n, 3);
        // (t, v) -> (t^2, v^2)
        let sq = |h: &HPoly| h.compose(&HPoly::x().pow(2), &HPoly::y().pow(2)).unwrap();
        let c2 = CurveSpec::new(sq(&c.a), sq(&c.b), sq(&c.c)).unwrap();
        let b2 = compute_mubasis(&c2).unwrap();
        let p = check_proper(&c2, &b2).unwrap();
        assert!(!p.proper);
        assert_eq!(p.implicit_degree, n);
        assert!(
            check_proper(&c, &compute_mubasis(&c).unwrap())
                .unwrap()
                .proper
        );
    }
}

#[test]
fn mu_is_invariant_under_coordinate_changes() {
    let mut rng = common::rng(36);
    for _ in 0..20 {
        let n = rng.gen_range(2..=5);
        let c = common::proper_curve(&mut rng, n, 3);
        let mu = compute_mubasis(&c).unwrap().mu;
        let m = loop {
            let e = common::ints(&mut rng, 4, 3);
            if e[0] * e[3] - e[1] * e[2] != 0 {
                break [[q(e[0]), q(e[1])], [q(e[2]), q(e[3])]];
            }
        };
        let r = c.reparametrize(m).unwrap();
        assert_eq!(compute_mubasis(&r).unwrap().mu, mu);
        let t = [[q(1), q(2), q(0)], [q(0), q(1), q(-1)], [q(3), q(0), q(1)]];
        let moved = c.transform(&t).unwrap();
        assert_eq!(compute_mubasis(&moved).unwrap().mu, mu);
    }
}

#[test]
fn degenerate_input_is_rejected() {
    // a common factor in (a, b, c)
    let l = HPoly::from_ints(&[1, 1]);
    let bad = CurveSpec::new(
        &l * &HPoly::from_ints(&[0, 1]),
        &l * &HPoly::from_ints(&[1, 0]),
        &l * &HPoly::from_ints(&[1, 1]),
    );
    assert!(bad.is_err());
    // mismatched degrees
    assert!(CurveSpec::new(
        HPoly::from_ints(&[1, 0]),
        HPoly::from_ints(&[0, 0, 1]),
        HPoly::from_ints(&[1, 1])
    )
    .is_err());
}
