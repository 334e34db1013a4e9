//! Independent cross-checks of a finished analysis.

use num_traits::Zero;

use super::blowup::{blow_up, move_to_origin, OriginForm};
use super::fg::{moving_product, restrict, smith_factors, syzygy_quotient};
use super::points::{fmt_point, Location, PointClass};
use super::{analyze, analyze_curve, AnalysisReport, Options, SingularityNode};
use crate::error::{Error, Result};
use crate::mubasis::{cross, CurveSpec, Syzygy};
use crate::poly::{format_q, BiHPoly, HPoly, Vars, Q};
use crate::polymat::{det_factors_h, rank_at, HPolyMat};
use crate::resultants::{bezout_matrix, hybrid_bezout_generic, resultant_tv};
use crate::verify::Check;

fn fmt_list(v: &[HPoly], vars: Vars) -> String {
    let items: Vec<String> = v.iter().map(|f| f.fmt_vars(vars)).collect();
    format!("[{}]", items.join(", "))
}

fn restrict_all(v: &[HPoly], factors: &[HPoly]) -> Vec<HPoly> {
    v.iter().map(|f| restrict(f, factors)).collect()
}

/// Rational point classes at level 0 with their origin forms.
fn origin_forms(report: &AnalysisReport, opts: &Options) -> Result<Vec<(PointClass, OriginForm)>> {
    let mut out = Vec::new();
    for class in &report.level.points {
        if let Location::Rational(pt) = &class.location {
            let of = move_to_origin(report.curve(), pt, &class.formula, opts.coord_bound)?;
            out.push((class.clone(), of));
        }
    }
    Ok(out)
}

/// `L = (c, 0, -a h)` on a moved curve `(a h, b h, c)`.
pub fn moving_line_l(of: &OriginForm) -> Syzygy {
    let n = of.curve.n;
    Syzygy([of.c.clone(), HPoly::zero(n), -&(&of.a * &of.h)])
}

/// `M = (-b, a, 0)` on a moved curve `(a h, b h, c)`.
pub fn moving_line_m(of: &OriginForm) -> Syzygy {
    let d = of.a.degree();
    Syzygy([-&of.b, of.a.clone(), HPoly::zero(d)])
}

/// Hybrid Bezout matrix `B_{t,v}(f, g)` for `deg_tv f <= deg_tv g`.
fn hybrid(f: &[HPoly], g: &[HPoly]) -> Result<HPolyMat> {
    hybrid_bezout_generic(f, g)
}

/// An origin form seen through a parameter change `(t, v) -> (t, k t + v)`
/// chosen so that `L` keeps its full `(t,v)`-degree, as the Hybrid Bezout
/// construction needs a nonzero leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub shift: i64,
    pub of: OriginForm,
    pub factors: Vec<HPoly>,
    pub order: usize,
    pub l: BiHPoly,
}

impl Frame {
    fn label(&self) -> String {
        match self.shift {
            0 => String::new(),
            1 => " (parameters v -> t + v)".into(),
            -1 => " (parameters v -> -t + v)".into(),
            k => format!(" (parameters v -> {k}t + v)"),
        }
    }
}

const SHIFTS: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

fn shifted(of: &OriginForm, k: i64) -> Result<OriginForm> {
    let (one, zero, kq) = (
        Q::from_integer(1.into()),
        Q::zero(),
        Q::from_integer(k.into()),
    );
    let sub = |f: &HPoly| f.substitute_linear(&one, &zero, &kq, &one);
    let curve = of
        .curve
        .reparametrize([[one.clone(), zero.clone()], [kq.clone(), one.clone()]])?;
    let h = sub(&of.h).normalized();
    let a = curve.a.exact_div(&h)?;
    let b = curve.b.exact_div(&h)?;
    let c = curve.c.clone();
    Ok(OriginForm {
        curve,
        transform: of.transform.clone(),
        shear: of.shear.clone(),
        h,
        a,
        b,
        c,
    })
}

/// First shift whose `L` has a nonzero leading `t`-coefficient.
pub fn frame(of: &OriginForm, class: &PointClass) -> Result<Option<Frame>> {
    for k in SHIFTS {
        let o = if k == 0 { of.clone() } else { shifted(of, k)? };
        let l = syzygy_quotient(&moving_line_l(&o), &o.curve)?;
        if l.tv_coefficients().last().map_or(true, |c| c.is_zero()) {
            continue;
        }
        let (one, zero, kq) = (
            Q::from_integer(1.into()),
            Q::zero(),
            Q::from_integer(k.into()),
        );
        let factors = class
            .factors
            .iter()
            .map(|f| f.substitute_linear(&one, &zero, &kq, &one).normalized())
            .collect();
        return Ok(Some(Frame {
            shift: k,
            of: o,
            factors,
            order: class.order,
            l,
        }));
    }
    Ok(None)
}

/// `(u x w) / P` when it is a form, `None` when `u x w` is not a multiple
/// of `P`.
pub fn cross_ratio(curve: &CurveSpec, u: &Syzygy, w: &Syzygy) -> Option<HPoly> {
    let cr = cross(&u.0, &w.0);
    let comps = curve.components();
    if cr.iter().all(|c| c.is_zero()) {
        return Some(HPoly::zero(0));
    }
    let k = (0..3).find(|&k| !comps[k].is_zero())?;
    let delta = cr[k].exact_div(comps[k]).ok()?;
    (0..3).all(|j| &delta * comps[j] == cr[j]).then_some(delta)
}

/// Smith forms of `B(F, G)` and `B(U/(sv-tu) . P, W/(sv-tu) . P)`
/// restricted to a point agree whenever `U, W` stay independent at its
/// parameters.
pub fn syzygy_invariance(
    curve: &CurveSpec,
    u: &Syzygy,
    w: &Syzygy,
    h: &HPoly,
    factors: &[HPoly],
    reference: &[HPoly],
) -> Result<Check> {
    let name = "syzygy-invariance";
    let Some(delta) = cross_ratio(curve, u, w) else {
        return Ok(Check::skip(
            name,
            "cross product of the pair is not a multiple of P",
        ));
    };
    if delta.is_zero() || !delta.gcd(h)?.is_unit() {
        return Ok(Check::skip(
            name,
            format!(
                "pair is dependent at the parameters of {}",
                h.fmt_vars(Vars::TV)
            ),
        ));
    }
    let fu = syzygy_quotient(u, curve)?;
    let fw = syzygy_quotient(w, curve)?;
    if fu.degree_tv() != fw.degree_tv() {
        return Ok(Check::skip(name, "quotients have different (t,v)-degrees"));
    }
    let got = restrict_all(&smith_factors(&bezout_matrix(&fu, &fw)?)?, factors);
    let want = restrict_all(reference, factors);
    Ok(Check::expect(
        name,
        got == want,
        format!(
            "at {}: {} vs {}",
            h.fmt_vars(Vars::TV),
            fmt_list(&got, Vars::SU),
            fmt_list(&want, Vars::SU)
        ),
    ))
}

/// Restricted Smith form of the Hybrid Bezout matrix of `h` and `L`:
/// `n - r` ones followed by `r - 1` copies of `h`.
pub fn h_block(fr: &Frame) -> Result<Check> {
    let n = fr.of.curve.n;
    let r = fr.order;
    let hq: Vec<HPoly> = fr
        .of
        .h
        .coeffs()
        .iter()
        .map(|c| HPoly::constant(c.clone()))
        .collect();
    let m = hybrid(&hq, &fr.l.tv_coefficients())?;
    let got = restrict_all(&smith_factors(&m)?, &fr.factors);
    let mut want = vec![HPoly::one(); n - r];
    want.extend(std::iter::repeat(fr.of.h.clone()).take(r - 1));
    let qdeg: usize = got.iter().map(|f| f.degree()).sum();
    Ok(Check::expect(
        "h-block",
        got == want,
        format!(
            "order {r}: {} (restricted degree {qdeg}, r(r-1) = {}){}",
            fmt_list(&got, Vars::SU),
            r * (r - 1),
            fr.label()
        ),
    ))
}

/// `(M, M_bar)` with `M = M_bar h(t,v)`.
fn m_bar(of: &OriginForm) -> Result<(BiHPoly, BiHPoly)> {
    let mq = syzygy_quotient(&moving_line_m(of), &of.curve)?;
    let mb = mq.exact_div(&BiHPoly::from_tv(&of.h))?;
    Ok((mq, mb))
}

/// Restricted Smith form of `B(M_bar, L)` against the trailing factors of
/// the blown-up curve's main Smith form.
pub fn bridge(fr: &Frame) -> Result<Check> {
    let (_, mb) = m_bar(&fr.of)?;
    let m = hybrid(&mb.tv_coefficients(), &fr.l.tv_coefficients())?;
    let got = restrict_all(&smith_factors(&m)?, &fr.factors);
    let bu = blow_up(&fr.of)?;
    let child = match &bu.curve {
        Some(c1) => {
            let mut scratch = Vec::new();
            restrict_all(
                &analyze_curve(c1, &mut scratch)?.smith.invariants,
                &fr.factors,
            )
        }
        None => Vec::new(),
    };
    let len = got.len().max(child.len());
    let pad = |v: &[HPoly]| -> Vec<HPoly> {
        let mut out = vec![HPoly::one(); len - v.len()];
        out.extend_from_slice(v);
        out
    };
    Ok(Check::expect(
        "bridge",
        pad(&got) == pad(&child),
        format!(
            "at {}: B(M_bar, L) {} vs blow-up {}{}",
            fr.of.h.fmt_vars(Vars::TV),
            fmt_list(&got, Vars::SU),
            fmt_list(&child, Vars::SU),
            fr.label()
        ),
    ))
}

/// `det B(M, L)` against `det B(M_bar, L) det B(h, L)`.
pub fn det_split(fr: &Frame) -> Result<Check> {
    let (mq, mb) = m_bar(&fr.of)?;
    let lc = fr.l.tv_coefficients();
    let hq: Vec<HPoly> = fr
        .of
        .h
        .coeffs()
        .iter()
        .map(|c| HPoly::constant(c.clone()))
        .collect();
    let full = bezout_matrix(&mq, &fr.l)?.det()?;
    let prod = &hybrid(&mb.tv_coefficients(), &lc)?.det()? * &hybrid(&hq, &lc)?.det()?;
    let ok = full.normalized() == prod.normalized() && full.is_zero() == prod.is_zero();
    Ok(Check::expect(
        "det-split",
        ok,
        format!(
            "det B(M,L) ~ {}, det B(M_bar,L) det B(h,L) ~ {}{}",
            full.normalized().fmt_vars(Vars::SU),
            prod.normalized().fmt_vars(Vars::SU),
            fr.label()
        ),
    ))
}

/// Coefficients of `s^i` (`i < deg phi`) of `f mod phi(s, 1)`, as forms
/// in `(t, v)`.
fn reduce_su(f: &BiHPoly, phi: &HPoly) -> Vec<HPoly> {
    let m = phi.dehom_first();
    let dm = m.degree().unwrap_or(0);
    let lc = m.leading().expect("nonconstant").clone();
    let mut rows = f.su_coefficients();
    while rows.len() > dm {
        let top = rows.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let k = rows.len() - dm;
        let scale = top.scale(&(Q::from_integer(1.into()) / &lc));
        for j in 0..dm {
            let c = m.coeff(j);
            if !c.is_zero() {
                rows[k + j] = &rows[k + j] - &scale.scale(&c);
            }
        }
    }
    rows
}

/// Does `f` vanish at every `(s, t)` with `phi_a(s) = phi_b(t) = 0`?
fn vanishes_mod(f: &BiHPoly, phi_a: &HPoly, phi_b: &HPoly) -> Result<bool> {
    if phi_a.degree() == 1 {
        let (s0, u0) = super::points::linear_root(phi_a);
        return Ok(phi_b.divides(&f.eval_su(&s0, &u0)?));
    }
    Ok(reduce_su(f, phi_a).iter().all(|c| phi_b.divides(c)))
}

/// `F` and `G` vanish at pairs of distinct parameters of one point, and on
/// the diagonal exactly at parameters repeated in the inversion formula.
pub fn symmetry(report: &AnalysisReport) -> Result<Vec<Check>> {
    let name = "symmetry";
    let fg = &report.level.fg;
    if report.level.points.is_empty() {
        let r = resultant_tv(&fg.f, &fg.g)?;
        return Ok(vec![Check::expect(
            name,
            !r.is_zero() && r.is_unit(),
            format!(
                "no singular parameters; Res_(t,v)(F,G) = {}",
                r.fmt_vars(Vars::SU)
            ),
        )]);
    }
    let (df, dg) = (fg.f.diagonal(), fg.g.diagonal());
    let mut out = Vec::new();
    for class in &report.level.points {
        match &class.location {
            Location::Rational(pt) => {
                let mut off = true;
                for a in &class.factors {
                    for b in class.factors.iter().filter(|b| *b != a) {
                        off &= vanishes_mod(&fg.f, a, b)? && vanishes_mod(&fg.g, a, b)?;
                    }
                }
                let diag = class.factors.iter().all(|phi| {
                    let repeated = class.formula.multiplicity_of(phi) >= 2;
                    (phi.divides(&df) && phi.divides(&dg)) == repeated
                });
                out.push(Check::expect(
                    name,
                    off && diag,
                    format!(
                        "{}: distinct parameter pairs {}, diagonal {}",
                        fmt_point(pt),
                        if off { "vanish" } else { "do not vanish" },
                        if diag {
                            "matches repeated parameters"
                        } else {
                            "mismatch"
                        }
                    ),
                ));
            }
            Location::Conjugate => {
                let phi = &class.factors[0];
                let diag = phi.divides(&df) && phi.divides(&dg);
                out.push(Check::logged(
                    name,
                    format!(
                        "conjugate class {}: F, G {} on the diagonal",
                        phi.fmt_vars(Vars::TV),
                        if diag { "vanish" } else { "do not vanish" }
                    ),
                ));
            }
        }
    }
    Ok(out)
}

/// Multiplicity of the implicit equation at each rational singular point.
pub fn implicit_multiplicity(report: &AnalysisReport) -> Vec<Check> {
    let f = &report.properness.implicit;
    report
        .level
        .points
        .iter()
        .filter_map(|c| c.point().map(|p| (c, p)))
        .map(|(c, p)| {
            let m = f.multiplicity_at(p);
            Check::expect(
                "implicit-multiplicity",
                m == c.order,
                format!(
                    "{}: implicit multiplicity {m}, order {}",
                    fmt_point(p),
                    c.order
                ),
            )
        })
        .collect()
}

/// The four resultant matrices built from `p P`, `q P`, `L1 P`, `L2 P`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourMatrices {
    /// Hybrid Bezout matrix eliminating `(s,u)`; entries in `(t,v)`.
    pub form1: HPolyMat,
    /// `B_{t,v}(p P, q P)`.
    pub form2: HPolyMat,
    /// `B_{s,u}(L1 P, L2 P)`; entries in `(t,v)`.
    pub form3: HPolyMat,
    /// `B_{t,v}(L1 P, L2 P)`.
    pub form4: HPolyMat,
}

pub fn four_matrices(report: &AnalysisReport) -> Result<FourMatrices> {
    let curve = report.curve();
    let basis = report.basis();
    let pp = moving_product(&basis.p, curve)?;
    let qp = moving_product(&basis.q, curve)?;
    let n = curve.n;
    let l1 = Syzygy([curve.c.clone(), HPoly::zero(n), -&curve.a]);
    let l2 = Syzygy([HPoly::zero(n), curve.c.clone(), -&curve.b]);
    let l1p = moving_product(&l1, curve)?;
    let l2p = moving_product(&l2, curve)?;
    Ok(FourMatrices {
        form1: hybrid(&pp.su_coefficients(), &qp.su_coefficients())?,
        form2: bezout_matrix(&pp, &qp)?,
        form3: bezout_matrix(&l1p.swap_pairs(), &l2p.swap_pairs())?,
        form4: bezout_matrix(&l1p, &l2p)?,
    })
}

/// Zero factors compare equal whatever degree they carry.
fn canon(v: &[HPoly]) -> Vec<HPoly> {
    v.iter()
        .map(|f| {
            if f.is_zero() {
                HPoly::zero(0)
            } else {
                f.normalized()
            }
        })
        .collect()
}

fn nonunit_nonzero(v: &[HPoly]) -> Vec<HPoly> {
    v.iter()
        .filter(|f| !f.is_zero() && !f.is_unit())
        .cloned()
        .collect()
}

/// Forms 3 and 4 agree up to sign, form 4 is `c(s,u)` times form 2, and
/// the agreement of form 1 with form 2 is recorded.
pub fn compare_four(report: &AnalysisReport) -> Result<Vec<Check>> {
    let fm = four_matrices(report)?;
    let c = &report.curve().c;
    let s2 = canon(&smith_factors(&fm.form2)?);
    let s3 = canon(&smith_factors(&fm.form3)?);
    let s4 = canon(&smith_factors(&fm.form4)?);
    let mut out = Vec::new();
    let neg = fm.form4.map(|x| -x);
    let detail = if fm.form3 == fm.form4 {
        "matrices equal".to_string()
    } else if fm.form3 == neg {
        "matrices differ by sign".to_string()
    } else {
        format!(
            "Smith forms {} vs {}",
            fmt_list(&s3, Vars::TV),
            fmt_list(&s4, Vars::SU)
        )
    };
    let same34 = fm.form3 == fm.form4 || fm.form3 == neg || s3 == s4;
    out.push(Check::expect("four-matrices:3-vs-4", same34, detail));
    let scaled = canon(&s2.iter().map(|f| f * c).collect::<Vec<_>>());
    out.push(Check::expect(
        "four-matrices:2-vs-4",
        scaled == s4,
        format!(
            "c(s,u) * {} vs {}",
            fmt_list(&s2, Vars::SU),
            fmt_list(&s4, Vars::SU)
        ),
    ));
    let mut main_plus = report.smith().invariants.clone();
    main_plus.push(HPoly::zero(0));
    out.push(Check::expect(
        "four-matrices:2-vs-main",
        s2 == canon(&main_plus),
        format!(
            "B(pP, qP): {} vs main with a trailing zero",
            fmt_list(&s2, Vars::SU)
        ),
    ));
    let s1 = canon(&smith_factors(&fm.form1)?);
    let (a, b) = (nonunit_nonzero(&s1), nonunit_nonzero(&s2));
    let agree = a
        .iter()
        .map(|f| f.coeffs().to_vec())
        .eq(b.iter().map(|f| f.coeffs().to_vec()));
    out.push(Check::logged(
        "four-matrices:1-vs-2",
        format!(
            "{}: hybrid {} vs full {}",
            if agree { "agree" } else { "DISAGREE" },
            fmt_list(&s1, Vars::TV),
            fmt_list(&s2, Vars::SU)
        ),
    ));
    Ok(out)
}

/// Inversion formula as a gcd at each rational parameter, the rank of
/// `B(pP, qP)` there, and divisibility of the determinant factor.
pub fn parameter_checks(report: &AnalysisReport) -> Result<Vec<Check>> {
    let curve = report.curve();
    let basis = report.basis();
    let n = curve.n;
    let form2 = bezout_matrix(
        &moving_product(&basis.p, curve)?,
        &moving_product(&basis.q, curve)?,
    )?;
    let dets = det_factors_h(&form2)?;
    let mut out = Vec::new();
    for class in &report.level.points {
        let Some(pt) = class.point() else { continue };
        let r = class.order;
        for (s0, u0) in class.rational_params() {
            let at = format!("{} at ({}:{})", fmt_point(pt), format_q(&s0), format_q(&u0));
            let pv: [Q; 3] =
                std::array::from_fn(|k| basis.p.0[k].eval(&s0, &u0).unwrap_or_else(|_| Q::zero()));
            let qv: [Q; 3] =
                std::array::from_fn(|k| basis.q.0[k].eval(&s0, &u0).unwrap_or_else(|_| Q::zero()));
            let dot = |v: &[Q; 3]| -> HPoly {
                let comps = curve.components();
                (0..3).fold(HPoly::zero(n), |acc, k| &acc + &comps[k].scale(&v[k]))
            };
            let g = dot(&pv).gcd(&dot(&qv))?;
            out.push(Check::expect(
                "inversion-gcd",
                g == class.formula,
                format!(
                    "{at}: gcd {} vs formula {}",
                    g.fmt_vars(Vars::TV),
                    class.formula.fmt_vars(Vars::TV)
                ),
            ));
            let rk = rank_at(&form2, &s0, &u0)?;
            out.push(Check::expect(
                "rank-deficiency",
                rk == n - r,
                format!("{at}: rank {rk}, n - r = {}", n - r),
            ));
        }
        let idx = n - r;
        let ok = dets
            .get(idx)
            .map(|d| class.formula.divides(d))
            .unwrap_or(false);
        out.push(Check::expect(
            "determinant-factor",
            ok,
            format!("{}: formula divides D_{}", fmt_point(pt), idx + 1),
        ));
    }
    Ok(out)
}

/// With no infinitely near points, each `d_k` is the product of the
/// order-`k` formulas.
pub fn flat_shape(report: &AnalysisReport) -> Result<Check> {
    let name = "flat-shape";
    if report.height() > 0 || report.nodes().iter().any(|n| !n.unattributed.is_empty()) {
        return Ok(Check::skip(
            name,
            "singularity tree has infinitely near points",
        ));
    }
    let ms = report.smith();
    let mut ok = true;
    for k in 2..ms.d_chain.len() + 2 {
        let prod = report
            .tree
            .iter()
            .filter(|n| n.order == k)
            .fold(HPoly::one(), |acc, n| &acc * &n.formula)
            .normalized();
        ok &= prod == ms.d(k);
    }
    Ok(Check::expect(
        name,
        ok,
        format!(
            "d-chain {} from level-0 formulas",
            fmt_list(&ms.d_chain, Vars::SU)
        ),
    ))
}

/// A fixed unimodular parameter change.
pub const REPARAM: [[i64; 2]; 2] = [[1, 2], [1, 3]];

fn shape(nodes: &[&SingularityNode], sub: impl Fn(&HPoly) -> HPoly) -> Vec<(usize, usize, Vec<Q>)> {
    let mut v: Vec<(usize, usize, Vec<Q>)> = nodes
        .iter()
        .map(|n| {
            (
                n.level,
                n.order,
                sub(&n.formula).normalized().coeffs().to_vec(),
            )
        })
        .collect();
    v.sort();
    v
}

/// Formulas move by the parameter substitution and orders are unchanged.
pub fn reparametrization(report: &AnalysisReport, opts: &Options) -> Result<Check> {
    let m = REPARAM.map(|r| r.map(|x| Q::from_integer(x.into())));
    let moved = report.curve().reparametrize(m.clone())?;
    let opts = Options {
        confirm_leaves: false,
        ..opts.clone()
    };
    let other = analyze(&moved, &opts)?;
    let sub = |h: &HPoly| h.substitute_linear(&m[0][0], &m[0][1], &m[1][0], &m[1][1]);
    let a = shape(&report.nodes(), sub);
    let b = shape(&other.nodes(), |h| h.clone());
    Ok(Check::expect(
        "reparametrization",
        a == b,
        format!(
            "{} nodes before, {} after (t,v) -> (t+2v, t+3v)",
            a.len(),
            b.len()
        ),
    ))
}

/// Every cross-check on a finished report.
pub fn run_all(report: &AnalysisReport, opts: &Options) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (class, of) in origin_forms(report, opts)? {
        let m = moving_line_m(&of);
        let l = moving_line_l(&of);
        out.push(syzygy_invariance(
            &of.curve,
            &m,
            &l,
            &of.h,
            &class.factors,
            &report.smith().invariants,
        )?);
        match frame(&of, &class)? {
            Some(fr) => {
                out.push(h_block(&fr)?);
                out.push(bridge(&fr)?);
                out.push(det_split(&fr)?);
            }
            None => {
                for name in ["h-block", "bridge", "det-split"] {
                    out.push(Check::skip(
                        name,
                        "no parameter shift keeps L at full degree",
                    ));
                }
            }
        }
    }
    out.extend(symmetry(report)?);
    out.extend(implicit_multiplicity(report));
    out.extend(compare_four(report)?);
    out.extend(parameter_checks(report)?);
    out.push(flat_shape(report)?);
    out.push(reparametrization(report, opts).or_else(|e| match e {
        Error::ImproperParametrization { .. } | Error::DegenerateCurve(_) => {
            Ok(Check::skip("reparametrization", e.to_string()))
        }
        e => Err(e),
    })?);
    Ok(out)
}
