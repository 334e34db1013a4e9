use super::blowup::{blow_up, move_to_origin};
use super::fg::restrict;
use super::points::{Location, PointClass};
use super::{analyze_curve, CurveAnalysis, Options};
use crate::error::{Error, Result};
use crate::poly::{isolate_real_roots, squarefree_part_h, HPoly, Interval, Vars, Q};
use crate::verify::Check;

/// Attribution marker for conjugate classes, whose neighbourhoods are
/// never blown up over the rationals.
pub const UNATTRIBUTED: &str = "unattributed-by-blow-up";
/// Attribution marker for nodes whose factors were confirmed by blow-up.
pub const BY_BLOW_UP: &str = "blow-up";

/// One singular point (level 0) or infinitely near singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityNode {
    pub level: usize,
    pub order: usize,
    pub formula: HPoly,
    pub factors: Vec<HPoly>,
    /// Coordinates in the plane of the curve at this level.
    pub point: Option<[Q; 3]>,
    /// Rational parameters `(t0 : v0)`.
    pub params: Vec<(Q, Q)>,
    /// Isolating intervals of the real roots of the formula in `t/v`.
    pub intervals: Vec<Interval>,
    pub children: Vec<SingularityNode>,
    /// Order of the level-0 point this node lies over.
    pub ancestor_order: Option<usize>,
    pub attribution: Option<String>,
    /// `(k, part)`: factors of `d_k` belonging to this conjugate class but
    /// not to its own order.
    pub unattributed: Vec<(usize, HPoly)>,
}

impl SingularityNode {
    fn from_class(
        class: &PointClass,
        level: usize,
        ancestor_order: Option<usize>,
        isolate: bool,
    ) -> Result<Self> {
        let intervals = if isolate {
            real_intervals(&class.formula)?
        } else {
            Vec::new()
        };
        Ok(SingularityNode {
            level,
            order: class.order,
            formula: class.formula.clone(),
            factors: class.factors.clone(),
            point: class.point().cloned(),
            params: class.rational_params(),
            intervals,
            children: Vec::new(),
            ancestor_order,
            attribution: None,
            unattributed: Vec::new(),
        })
    }

    /// Every node of the subtree, parents before children.
    pub fn walk(&self) -> Vec<&SingularityNode> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }

    pub fn height(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.height())
            .max()
            .unwrap_or(0)
    }

    /// `(order - 1) deg(formula)` plus the weighted unattributed parts.
    pub fn budget_share(&self) -> usize {
        (self.order - 1) * self.formula.degree()
            + self
                .unattributed
                .iter()
                .map(|(k, p)| (k - 1) * p.degree())
                .sum::<usize>()
    }

    /// Product of the order-`k` contributions of all strict descendants.
    pub fn descendant_product(&self, k: usize) -> HPoly {
        let mut acc = HPoly::one();
        for c in &self.children {
            for d in c.walk() {
                if d.order == k {
                    acc = &acc * &d.formula;
                }
                for (kk, p) in &d.unattributed {
                    if *kk == k {
                        acc = &acc * p;
                    }
                }
            }
        }
        acc.normalized()
    }
}

/// Real roots of the formula in the chart `v = 1`.
fn real_intervals(f: &HPoly) -> Result<Vec<Interval>> {
    let sq = squarefree_part_h(f)?.dehom_first();
    if sq.is_constant() {
        return Ok(Vec::new());
    }
    isolate_real_roots(&sq)
}

/// `psi_k` for `k = 2..=r`: the point's share of `d_k`, with its own
/// inversion formula removed at `k = r`.
fn psi_parts(level: &CurveAnalysis, class: &PointClass) -> Result<Vec<(usize, HPoly)>> {
    (2..=class.order)
        .map(|k| {
            let dq = restrict(&level.smith.d(k), &class.factors);
            let p = if k == class.order {
                dq.exact_div(&class.formula)?
            } else {
                dq
            };
            Ok((k, p.normalized()))
        })
        .collect()
}

fn describe(node: &SingularityNode) -> String {
    let at = match &node.point {
        Some(p) => super::points::fmt_point(p),
        None => format!("conjugate class {}", node.formula.fmt_vars(Vars::TV)),
    };
    format!("level {} point {at}", node.level)
}

/// Build the node for one class at one level, blowing up where the
/// `d`-chain carries factors beyond the point's own inversion formula.
pub(crate) fn build_node(
    level: &CurveAnalysis,
    class: &PointClass,
    depth: usize,
    ancestor_order: Option<usize>,
    opts: &Options,
    checks: &mut Vec<Check>,
) -> Result<SingularityNode> {
    let mut node = SingularityNode::from_class(class, depth, ancestor_order, opts.isolate_roots)?;
    let pt = match &class.location {
        Location::Conjugate => {
            node.unattributed = (2..class.order)
                .map(|k| (k, restrict(&level.smith.d(k), &class.factors)))
                .filter(|(_, p)| p.degree() > 0)
                .collect();
            node.attribution = Some(UNATTRIBUTED.into());
            return Ok(node);
        }
        Location::Rational(p) => p.clone(),
    };
    let psi = psi_parts(level, class)?;
    let nontrivial = psi.iter().any(|(_, p)| p.degree() > 0);
    if !nontrivial && !(opts.confirm_leaves && depth == 0) {
        return Ok(node);
    }
    if nontrivial && depth >= opts.max_depth {
        return Err(Error::Incomplete(format!(
            "{}: factors remain unattributed at blow-up depth {}",
            describe(&node),
            opts.max_depth
        )));
    }
    let origin = move_to_origin(&level.curve, &pt, &class.formula, opts.coord_bound)?;
    let bu = blow_up(&origin)?;
    let root_order = ancestor_order.unwrap_or(class.order);
    if let Some(c1) = bu.curve {
        let sub = analyze_curve(&c1, checks)?;
        let sq = squarefree_part_h(&class.formula)?;
        for child in &sub.points {
            let inside = child.factors.iter().filter(|f| f.divides(&sq)).count();
            if inside == 0 {
                continue;
            }
            if inside != child.factors.len() {
                return Err(Error::Inconsistent(format!(
                    "{}: a point of the blow-up mixes parameters over and away from it",
                    describe(&node)
                )));
            }
            node.children.push(build_node(
                &sub,
                child,
                depth + 1,
                Some(root_order),
                opts,
                checks,
            )?);
        }
    }
    node.attribution = Some(BY_BLOW_UP.into());
    for (k, p) in &psi {
        let got = node.descendant_product(*k);
        checks.push(Check::expect(
            "attribution",
            got == *p,
            format!(
                "{} order {k}: d-chain share {} vs blow-up {}",
                describe(&node),
                p.fmt_vars(Vars::TV),
                got.fmt_vars(Vars::TV)
            ),
        ));
    }
    let worst = node.children.iter().map(|c| c.order).max().unwrap_or(0);
    checks.push(Check::expect(
        "order-monotonicity",
        worst <= node.order,
        format!(
            "{}: order {}, largest child order {worst}",
            describe(&node),
            node.order
        ),
    ));
    Ok(node)
}

/// Singularity tree for every class at level 0.
pub fn attribute(
    level: &CurveAnalysis,
    opts: &Options,
    checks: &mut Vec<Check>,
) -> Result<Vec<SingularityNode>> {
    level
        .points
        .iter()
        .map(|c| build_node(level, c, 0, None, opts, checks))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mubasis::CurveSpec;
    use crate::poly::q;
    use crate::singularity::analyze;

    fn curve(a: &[i64], b: &[i64], c: &[i64]) -> CurveSpec {
        CurveSpec::new(
            HPoly::from_ints(a),
            HPoly::from_ints(b),
            HPoly::from_ints(c),
        )
        .unwrap()
    }

    fn tacnode() -> CurveSpec {
        curve(&[-1, 0, 0, 0, 1], &[-2, 0, 1, 0, 1], &[1, -4, 0, 1, 1])
    }

    #[test]
    fn tacnode_has_one_infinitely_near_point() {
        let r = analyze(&tacnode(), &Options::default()).unwrap();
        assert_eq!(r.tree.len(), 2);
        let tac = r
            .tree
            .iter()
            .find(|n| n.point == Some([q(0), q(0), q(1)]))
            .unwrap();
        assert_eq!(tac.children.len(), 1);
        let child = &tac.children[0];
        assert_eq!((child.level, child.order), (1, 2));
        assert_eq!(child.ancestor_order, Some(2));
        assert_eq!(child.formula, tac.formula);
        assert_eq!(tac.descendant_product(2), tac.formula);
        assert_eq!(tac.budget_share() + child.budget_share(), 4);
        assert_eq!(r.height(), 1);
    }

    #[test]
    fn depth_limit_is_an_explicit_error() {
        let opts = Options {
            max_depth: 0,
            ..Options::default()
        };
        let e = analyze(&tacnode(), &opts).unwrap_err();
        assert!(e.is_incomplete(), "{e}");
    }

    #[test]
    fn real_roots_are_isolated_on_request() {
        let opts = Options {
            isolate_roots: true,
            ..Options::default()
        };
        let r = analyze(&curve(&[-1, 0, 1, 0], &[0, -1, 0, 1], &[1, 0, 0, 0]), &opts).unwrap();
        let iv = &r.tree[0].intervals;
        assert_eq!(iv.len(), 2);
        assert!(iv[0].contains(&q(-1)) && iv[1].contains(&q(1)));
    }

    #[test]
    fn conjugate_points_are_marked_unattributed() {
        // a quartic with a rational node at the origin and two further nodes
        // whose four parameters form one Q-irreducible quartic
        let c = curve(&[0, -1, -2, 1, 0], &[0, 2, 2, -1, 0], &[-2, 2, 1, -2, 2]);
        let r = analyze(&c, &Options::default()).unwrap();
        let nodes = r.nodes();
        assert_eq!(nodes.len(), 2);
        let conj: Vec<_> = nodes.iter().filter(|n| n.point.is_none()).collect();
        assert_eq!(conj.len(), 1);
        assert_eq!(conj[0].order, 2);
        assert_eq!(conj[0].formula.degree(), 4);
        assert_eq!(conj[0].attribution.as_deref(), Some(UNATTRIBUTED));
        assert!(conj[0].children.is_empty());
        assert!(r.budget.ok);
    }
}
