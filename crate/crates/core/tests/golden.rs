mod common;

use ratsing::mubasis::{compute_mubasis, implicitize, CurveSpec, Form3};
use ratsing::poly::{q, HPoly, UPoly, Q};
use ratsing::polymat::{det_factors_h_minors, HPolyMat};
use ratsing::singularity::{analyze, verify, AnalysisReport, Options};

fn report(c: &CurveSpec) -> AnalysisReport {
    analyze(c, &Options::default()).unwrap()
}

/// `D_1 = gcd of entries`, `D_2 = det` for a 2 x 2 form matrix.
fn det_factors_2x2(m: &HPolyMat) -> Vec<HPoly> {
    let d1 = HPoly::gcd_all(m.entries()).unwrap().normalized();
    let det = (&(m.get(0, 0) * m.get(1, 1)) - &(m.get(0, 1) * m.get(1, 0))).normalized();
    vec![d1, det]
}

fn t_form(c: &[i64]) -> HPoly {
    HPoly::from_ints(c).normalized()
}

/// Value and first derivative of `f(t, 1)`.
fn value_and_slope(h: &HPoly, t: i64) -> (Q, Q) {
    let u: UPoly = h.dehom_first();
    (u.eval(&q(t)), u.derivative().eval(&q(t)))
}

#[test]
fn cusp_golden() {
    let c = common::cusp();
    let r = report(&c);
    assert_eq!(r.smith().invariants, vec![HPoly::one(), t_form(&[0, 0, 1])]);
    assert_eq!(
        det_factors_2x2(&r.smith().matrix),
        vec![HPoly::one(), t_form(&[0, 0, 1])]
    );
    assert_eq!(
        det_factors_h_minors(&r.smith().matrix).unwrap(),
        det_factors_2x2(&r.smith().matrix)
    );
    let nodes = r.nodes();
    assert_eq!(nodes.len(), 1);
    assert_eq!((nodes[0].level, nodes[0].order), (0, 2));
    assert_eq!(nodes[0].formula, t_form(&[0, 0, 1]));
    assert_eq!(nodes[0].point.clone().unwrap(), [q(0), q(0), q(1)]);
    assert!(nodes[0].children.is_empty());
    assert!(r.budget.ok && r.budget.lhs == 2);

    // x^3 - y^2 w: every first partial vanishes at (0,0,1), f_yy = -2w does not
    let f = implicitize(&compute_mubasis(&c).unwrap()).unwrap();
    let want = Form3::from_ints(3, &[([3, 0, 0], 1), ([0, 2, 1], -1)])
        .unwrap()
        .normalized();
    assert_eq!(f, want);
    let (x, y, w) = (q(0), q(0), q(1));
    let fx = q(3) * &x * &x;
    let fy = q(-2) * &y * &w;
    let fw = -(&y * &y);
    let fyy = q(-2) * &w;
    assert!(fx == q(0) && fy == q(0) && fw == q(0) && fyy != q(0));
}

#[test]
fn node_golden() {
    let c = common::node();
    let r = report(&c);
    let h = t_form(&[-1, 0, 1]);
    assert_eq!(r.smith().invariants, vec![HPoly::one(), h.clone()]);
    assert_eq!(
        det_factors_2x2(&r.smith().matrix),
        vec![HPoly::one(), h.clone()]
    );
    let nodes = r.nodes();
    assert_eq!(nodes.len(), 1);
    assert_eq!((nodes[0].level, nodes[0].order), (0, 2));
    assert_eq!(nodes[0].formula, h);
    assert!(nodes[0].children.is_empty());
    let mut params = nodes[0].params.clone();
    params.sort();
    assert_eq!(params, vec![(q(-1), q(1)), (q(1), q(1))]);

    // y^2 = x^2 (x + 1): f = x^3 + x^2 w - y^2 w, a double point at the origin
    let f = implicitize(&compute_mubasis(&c).unwrap()).unwrap();
    let want = Form3::from_ints(3, &[([3, 0, 0], 1), ([2, 0, 1], 1), ([0, 2, 1], -1)])
        .unwrap()
        .normalized();
    assert_eq!(f, want);
    // second partials at (0,0,1): f_xx = 6x + 2w = 2, f_yy = -2w = -2
    assert_eq!(f.multiplicity_at(&[q(0), q(0), q(1)]), 2);
}

#[test]
fn conic_golden() {
    let c = common::conic();
    let r = report(&c);
    assert!(r.nodes().is_empty());
    assert!(r.smith().d_chain.is_empty());
    assert_eq!(r.smith().invariants, vec![HPoly::one()]);
    assert!(r.budget.ok && r.budget.lhs == 0 && r.budget.rhs == 0);
    let f = implicitize(&compute_mubasis(&c).unwrap()).unwrap();
    let want = Form3::from_ints(2, &[([0, 2, 0], 1), ([1, 0, 1], -1)])
        .unwrap()
        .normalized();
    assert_eq!(f, want);
}

#[test]
fn tacnode_branches_share_a_tangent() {
    // parameters t = 1 and t = -1 both land on (0 : 0 : 1) with parallel
    // tangents, so the branches meet again after one blow-up; t = 2 and
    // t = -2 meet transversally
    let c = common::tacnode();
    let tangent = |t: i64| {
        let (a, da) = value_and_slope(&c.a, t);
        let (b, db) = value_and_slope(&c.b, t);
        let (w, _) = value_and_slope(&c.c, t);
        (a, b, w, da, db)
    };
    let (a1, b1, w1, da1, db1) = tangent(1);
    let (a2, b2, w2, da2, db2) = tangent(-1);
    assert!(a1 == q(0) && b1 == q(0) && w1 != q(0));
    assert!(a2 == q(0) && b2 == q(0) && w2 != q(0));
    assert_eq!(&da1 * &db2, &db1 * &da2);

    let (a3, b3, w3, ..) = tangent(2);
    let (a4, b4, w4, ..) = tangent(-2);
    assert_eq!([&a3 / &w3, &b3 / &w3], [&a4 / &w4, &b4 / &w4]);
    assert_eq!([&a3 / &w3, &b3 / &w3], [q(15) / q(17), q(18) / q(17)]);
    let slope = |t: i64| {
        // direction of the affine branch (a/c, b/c) at t
        let (a, da) = value_and_slope(&c.a, t);
        let (b, db) = value_and_slope(&c.b, t);
        let (w, dw) = value_and_slope(&c.c, t);
        let dx = (&da * &w - &a * &dw) / (&w * &w);
        let dy = (&db * &w - &b * &dw) / (&w * &w);
        (dx, dy)
    };
    let (x3, y3) = slope(2);
    let (x4, y4) = slope(-2);
    assert_ne!(&x3 * &y4, &y3 * &x4);
}

#[test]
fn tacnode_golden() {
    let c = common::tacnode();
    let r = report(&c);
    let tac = t_form(&[-1, 0, 1]);
    let node = t_form(&[-4, 0, 1]);
    // d_2 = h_tac * psi * h_node with psi = t^2 - v^2
    let d2 = r.smith().d(2);
    assert_eq!(d2, (&(&tac * &tac) * &node).normalized());
    assert_eq!(r.smith().d_chain.len(), 1);
    let top = &r.tree;
    assert_eq!(top.len(), 2);
    let t = top.iter().find(|n| n.formula == tac).unwrap();
    assert_eq!(t.point.clone().unwrap(), [q(0), q(0), q(1)]);
    assert_eq!(t.children.len(), 1);
    let child = &t.children[0];
    assert_eq!(
        (child.level, child.order, child.formula.degree()),
        (1, 2, 2)
    );
    assert_eq!(child.formula, tac);
    let n = top.iter().find(|n| n.formula == node).unwrap();
    assert_eq!(n.point.clone().unwrap(), [q(15), q(18), q(17)]);
    assert!(n.children.is_empty());
    assert!(r.budget.ok && r.budget.lhs == 6 && r.budget.rhs == 6);
}

#[test]
fn every_golden_verifies() {
    for (name, c) in common::goldens() {
        let r = verify(&c, &Options::default()).unwrap();
        let failed = r.failed_checks();
        assert!(failed.is_empty(), "{name}: {failed:?}");
        for ck in &r.verifications {
            if ck.name == "four-matrices:1-vs-2" {
                assert!(ck.detail.starts_with("agree"), "{name}: {}", ck.detail);
            }
        }
    }
}
