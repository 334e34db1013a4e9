mod common;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use ratsing::poly::{q, BiHPoly, HPoly, UPoly};
use ratsing::polymat::{
    check_cayley_padding, check_product_divisibility, det_factors_h_minors, det_factors_h_snf,
    det_factors_minors, det_factors_snf, invariant_factors_u, invariants_by_determinant,
    is_diagonal, is_divisibility_chain_h, is_divisibility_chain_u, is_unimodular, rank_at,
    snf_homogeneous, snf_univariate, HPolyMat, Matrix, PolyMat,
};

/// A random invariant-factor chain `f_1 | f_2 | ... | f_n` built from a few
/// small linear and quadratic pieces, normalized.
fn planted_chain(rng: &mut ChaCha8Rng, n: usize) -> Vec<UPoly> {
    let pieces = [
        UPoly::from_ints(&[-1, 1]),
        UPoly::from_ints(&[2, 1]),
        UPoly::from_ints(&[1, 0, 1]),
        UPoly::from_ints(&[-3, 1]),
    ];
    let mut out = Vec::with_capacity(n);
    let mut acc = UPoly::one();
    for _ in 0..n {
        for p in &pieces {
            if rng.gen_bool(0.3) {
                acc = &acc * p;
            }
        }
        out.push(acc.normalized());
    }
    out
}

/// Random unimodular matrix: a product of elementary operations with
/// polynomial multipliers of degree at most one.
fn unimodular(rng: &mut ChaCha8Rng, n: usize) -> PolyMat {
    let mut m = PolyMat::identity(n);
    for _ in 0..2 * n {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            m.swap_rows(i, (i + 1) % n);
            continue;
        }
        let c = UPoly::from_ints(&common::ints(rng, 2, 2));
        m.add_row_multiple(i, j, &c);
    }
    m
}

fn disguised(rng: &mut ChaCha8Rng, chain: &[UPoly]) -> PolyMat {
    let n = chain.len();
    let d = PolyMat::diagonal(chain);
    let a = unimodular(rng, n);
    let b = unimodular(rng, n).transpose();
    a.mul(&d).unwrap().mul(&b).unwrap()
}

fn running_products(f: &[UPoly]) -> Vec<UPoly> {
    let mut acc = UPoly::one();
    f.iter()
        .map(|x| {
            acc = (&acc * x).normalized();
            acc.clone()
        })
        .collect()
}

#[test]
fn planted_chains_are_recovered_by_both_routes() {
    let mut rng = common::rng(1);
    for _ in 0..40 {
        let n = rng.gen_range(2..=4);
        let chain = planted_chain(&mut rng, n);
        let a = disguised(&mut rng, &chain);
        let elim = snf_univariate(&a, false).unwrap().invariant_factors;
        let det = invariants_by_determinant(&a)
            .unwrap()
            .expect("nonsingular square");
        assert_eq!(elim, chain, "elimination on {a:?}");
        assert_eq!(det, chain, "determinant route on {a:?}");
        assert_eq!(invariant_factors_u(&a).unwrap(), chain);
    }
}

#[test]
fn minors_agree_with_smith_form() {
    let mut rng = common::rng(2);
    for _ in 0..30 {
        let n = rng.gen_range(2..=4);
        let mut a = PolyMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let deg = rng.gen_range(0..=2);
                a.set(i, j, common::upoly(&mut rng, deg, 3));
            }
        }
        if a.det().unwrap().is_zero() {
            continue;
        }
        let by_minors = det_factors_minors(&a).unwrap();
        assert_eq!(by_minors, det_factors_snf(&a).unwrap());
        let det_route = invariants_by_determinant(&a).unwrap().unwrap();
        assert_eq!(by_minors, running_products(&det_route));
    }
}

#[test]
fn rank_deficient_matrices_keep_trailing_zeros() {
    let mut rng = common::rng(3);
    for _ in 0..20 {
        let mut chain = planted_chain(&mut rng, 2);
        chain.push(UPoly::zero());
        let a = disguised(&mut rng, &chain);
        let s = snf_univariate(&a, false).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.invariant_factors, chain);
        assert!(invariants_by_determinant(&a).unwrap().is_none());
        assert_eq!(invariant_factors_u(&a).unwrap(), chain);
        assert_eq!(det_factors_minors(&a).unwrap().len(), 2);
    }
}

#[test]
fn tracked_transforms_diagonalize() {
    let mut rng = common::rng(4);
    for _ in 0..20 {
        let (m, n) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let mut a = PolyMat::zeros(m, n);
        for i in 0..m {
            for j in 0..n {
                a.set(i, j, UPoly::from_ints(&common::ints(&mut rng, 3, 3)));
            }
        }
        if a.is_zero() {
            continue;
        }
        let s = snf_univariate(&a, true).unwrap();
        let (l, r) = (s.left.unwrap(), s.right.unwrap());
        assert!(is_unimodular(&l).unwrap() && is_unimodular(&r).unwrap());
        let d = l.mul(&a).unwrap().mul(&r).unwrap();
        assert!(is_diagonal(&d));
        for (k, f) in s.invariant_factors.iter().enumerate() {
            assert_eq!(d.get(k, k).normalized(), *f);
        }
        assert!(is_divisibility_chain_u(&s.invariant_factors));
    }
}

fn random_hmat(rng: &mut ChaCha8Rng, n: usize, d: usize) -> HPolyMat {
    let mut a = Matrix::from_fn(n, n, |_, _| HPoly::zero(d));
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, common::hpoly(rng, d, 3));
        }
    }
    a
}

#[test]
fn homogeneous_smith_form_matches_minors_in_both_charts() {
    let mut rng = common::rng(5);
    for _ in 0..25 {
        let n = rng.gen_range(2..=3);
        let mut a = random_hmat(&mut rng, n, 2);
        // force a common factor y^2 on the first row to exercise the second chart
        if rng.gen_bool(0.5) {
            for j in 0..n {
                let e = &a.get(0, j).clone() * &HPoly::y().pow(2);
                a.set(0, j, e);
            }
        }
        if a.is_zero() {
            continue;
        }
        let s = snf_homogeneous(&a).unwrap();
        assert!(is_divisibility_chain_h(&s.invariant_factors));
        assert_eq!(
            det_factors_h_minors(&a).unwrap(),
            det_factors_h_snf(&a).unwrap()
        );
    }
}

#[test]
fn rank_drops_exactly_at_invariant_factor_roots() {
    let mut rng = common::rng(6);
    for _ in 0..20 {
        let chain = planted_chain(&mut rng, 3);
        let a = disguised(&mut rng, &chain);
        // entries of a homogeneous matrix share one degree
        let deg = a.entries().iter().filter_map(|e| e.degree()).max().unwrap();
        let h = a.map(|e| HPoly::homogenize(e, deg).unwrap());
        for root in [1i64, -2, 3, 0] {
            let expect = chain.iter().filter(|f| f.eval(&q(root)) != q(0)).count();
            assert_eq!(rank_at(&h, &q(root), &q(1)).unwrap(), expect);
        }
    }
}

#[test]
fn products_respect_invariant_factor_divisibility() {
    let mut rng = common::rng(7);
    for _ in 0..10 {
        let (ca, cb) = (planted_chain(&mut rng, 3), planted_chain(&mut rng, 3));
        let a = disguised(&mut rng, &ca);
        let b = disguised(&mut rng, &cb);
        let c = check_product_divisibility(&a, &b, 3).unwrap();
        assert!(!c.failed(), "{c:?}");
    }
}

#[test]
fn cayley_multiple_pads_one_zero() {
    let mut rng = common::rng(8);
    for _ in 0..10 {
        let f = BiHPoly::outer(
            &common::hpoly(&mut rng, 1, 3),
            &common::hpoly(&mut rng, 2, 3),
        );
        let g = BiHPoly::outer(
            &common::hpoly(&mut rng, 1, 3),
            &common::hpoly(&mut rng, 2, 3),
        );
        let f = f
            .checked_add(&BiHPoly::outer(
                &common::hpoly(&mut rng, 1, 3),
                &common::hpoly(&mut rng, 2, 3),
            ))
            .unwrap();
        let c = check_cayley_padding(&f, &g).unwrap();
        assert!(!c.failed(), "{c:?}");
    }
}
