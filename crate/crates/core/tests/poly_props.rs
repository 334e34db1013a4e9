mod common;

use proptest::prelude::*;

use ratsing::poly::parse::{parse_hpoly, parse_upoly};
use ratsing::poly::{
    factor_hpoly, format_q, parse_q, q, qf, squarefree_decomposition, HPoly, UPoly, Vars,
};
use ratsing::resultants::resultant_h;

fn small_ints(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, len)
}

fn nonzero_upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    (0..=max_deg)
        .prop_flat_map(|d| small_ints(d + 1))
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| UPoly::from_ints(&c))
}

fn hform(d: usize) -> impl Strategy<Value = HPoly> {
    small_ints(d + 1)
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| HPoly::from_ints(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn division_reconstructs(a in nonzero_upoly(6), b in nonzero_upoly(4)) {
        let (qq, r) = a.div_rem(&b);
        prop_assert_eq!(&(&qq * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both_and_is_normalized(a in nonzero_upoly(5), b in nonzero_upoly(5), c in nonzero_upoly(2)) {
        let (fa, fb) = (&a * &c, &b * &c);
        let g = fa.gcd(&fb);
        prop_assert!(g.divides(&fa) && g.divides(&fb));
        prop_assert!(c.divides(&g));
        prop_assert_eq!(g.normalized(), g.clone());
        let (g2, x, y) = fa.xgcd(&fb);
        prop_assert_eq!(&(&x * &fa) + &(&y * &fb), g2.clone());
        prop_assert_eq!(g2.normalized(), g);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(f in hform(3), g in hform(2)) {
        let r = resultant_h(&f, &g).unwrap();
        let common = f.gcd(&g).unwrap().degree() > 0;
        prop_assert_eq!(r == q(0), common);
    }

    #[test]
    fn homogenize_round_trips_in_both_charts(f in hform(4)) {
        let d = f.degree();
        prop_assert_eq!(HPoly::homogenize(&f.dehom_first(), d).unwrap(), f.clone());
        prop_assert_eq!(HPoly::homogenize_second(&f.dehom_second(), d).unwrap(), f);
    }

    #[test]
    fn text_syntax_round_trips(f in hform(4)) {
        for vars in [Vars::TV, Vars::SU] {
            let back = parse_hpoly(&f.fmt_vars(vars), vars, Some(f.degree())).unwrap();
            prop_assert_eq!(&back, &f);
        }
    }

    #[test]
    fn rationals_print_canonically(n in -500i64..500, d in 1i64..60) {
        let x = qf(n, d);
        let s = format_q(&x);
        prop_assert_eq!(parse_q(&s).unwrap(), x);
        prop_assert!(!s.ends_with("/1"));
    }

    #[test]
    fn factorization_multiplies_back(a in hform(2), b in hform(2), c in hform(1)) {
        let f = &(&a * &b) * &(&c * &c);
        let fz = factor_hpoly(&f).unwrap();
        let mut prod = HPoly::constant(fz.constant.clone());
        for (p, k) in &fz.factors {
            prop_assert_eq!(p.normalized(), p.clone());
            prod = &prod * &p.pow(*k);
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn squarefree_parts_are_coprime_and_squarefree(a in nonzero_upoly(3), b in nonzero_upoly(2)) {
        let f = &(&a * &b) * &b;
        let parts = squarefree_decomposition(&f).unwrap();
        let mut prod = UPoly::one();
        for (g, k) in &parts {
            prop_assert!(g.gcd(&g.derivative()).is_constant());
            prod = &prod * &g.pow(*k);
        }
        for (i, (g, _)) in parts.iter().enumerate() {
            for (h, _) in &parts[i + 1..] {
                prop_assert!(g.gcd(h).is_constant());
            }
        }
        prop_assert_eq!(prod.normalized(), f.normalized());
    }
}

#[test]
fn zero_form_keeps_its_degree() {
    let z = HPoly::zero(3);
    assert!(z.is_zero());
    assert_eq!(z.degree(), 3);
    assert_eq!(parse_hpoly("0", Vars::TV, Some(3)).unwrap(), z);
}

#[test]
fn text_syntax_examples() {
    let f = parse_hpoly("t^2*v - 3/2*v^3", Vars::TV, None).unwrap();
    assert_eq!(f.coeffs(), &[qf(-3, 2), q(0), q(1), q(0)]);
    assert_eq!(f.fmt_vars(Vars::TV), "t^2*v - 3/2*v^3");
    let g = parse_upoly("2*x^2 - 1", "x").unwrap();
    assert_eq!(g, UPoly::from_ints(&[-1, 0, 2]));
    let e = parse_hpoly("t^2 + v", Vars::TV, None).unwrap_err();
    assert!(e.to_string().contains("homogeneous"), "{e}");
}

#[test]
fn seeded_gcd_against_brute_force_roots() {
    // gcd degree equals the number of shared rational roots for products of
    // distinct linear factors
    let mut rng = common::rng(11);
    for _ in 0..40 {
        let roots_a: Vec<i64> = common::ints(&mut rng, 3, 4);
        let roots_b: Vec<i64> = common::ints(&mut rng, 3, 4);
        let build = |rs: &[i64]| {
            let mut set = rs.to_vec();
            set.sort();
            set.dedup();
            let p = set
                .iter()
                .fold(UPoly::one(), |acc, &r| &acc * &UPoly::from_ints(&[-r, 1]));
            (p, set)
        };
        let (a, sa) = build(&roots_a);
        let (b, sb) = build(&roots_b);
        let shared = sa.iter().filter(|r| sb.contains(r)).count();
        assert_eq!(a.gcd(&b).degree().unwrap(), shared);
    }
}
