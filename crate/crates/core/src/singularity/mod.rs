//! Singular points of a rational planar curve read off the Smith form of
//! `B_{t,v}(F, G)`, with infinitely near points attributed by blow-up.

mod blowup;
pub mod checks;
mod fg;
mod points;
mod tree;

pub use blowup::{blow_up, move_to_origin, to_origin, BlowUp, Mat3, OriginForm};
pub(crate) use fg::smith_factors;
pub use fg::{build_fg, main_smith, moving_product, restrict, syzygy_quotient, FGPair, MainSmith};
pub use points::{
    fmt_point, inversion_formula, linear_root, locate, normalize_point, singular_points, Location,
    PointClass,
};
pub use tree::{attribute, SingularityNode, BY_BLOW_UP, UNATTRIBUTED};

use crate::error::{Error, Result};
use crate::mubasis::{
    check_proper, compute_mubasis, verify_mubasis, CurveSpec, MuBasis, Properness,
};
use crate::verify::Check;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Deepest blow-up level allowed before giving up.
    pub max_depth: usize,
    /// Largest shear coefficient tried when moving a point to the origin.
    pub coord_bound: usize,
    pub isolate_roots: bool,
    /// Blow up every rational point on the curve itself, including those
    /// whose `d`-chain share says nothing lies over them.
    pub confirm_leaves: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_depth: 8,
            coord_bound: 20,
            isolate_roots: false,
            confirm_leaves: false,
        }
    }
}

/// μ-basis, `F, G`, main Smith form and singular classes of one curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveAnalysis {
    pub curve: CurveSpec,
    pub basis: MuBasis,
    pub fg: FGPair,
    pub smith: MainSmith,
    pub points: Vec<PointClass>,
}

/// Runs the pipeline on one curve without the properness test, appending
/// the μ-basis contracts to `checks`.
pub fn analyze_curve(curve: &CurveSpec, checks: &mut Vec<Check>) -> Result<CurveAnalysis> {
    analyze_with_basis(curve, compute_mubasis(curve)?, checks)
}

fn analyze_with_basis(
    curve: &CurveSpec,
    basis: MuBasis,
    checks: &mut Vec<Check>,
) -> Result<CurveAnalysis> {
    let (mc, _) = verify_mubasis(curve, &basis);
    checks.extend(mc);
    let fg = build_fg(curve, &basis)?;
    let smith = main_smith(&fg, curve.n, basis.mu)?;
    let points = singular_points(curve, &basis, &smith)?;
    Ok(CurveAnalysis {
        curve: curve.clone(),
        basis,
        fg,
        smith,
        points,
    })
}

/// `sum_k (k - 1) deg d_k` against `(n - 1)(n - 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

impl Budget {
    pub fn of(level: &CurveAnalysis) -> Budget {
        let n = level.curve.n;
        let lhs = level.smith.weighted_degree();
        let rhs = (n - 1) * (n.max(2) - 2);
        Budget {
            lhs,
            rhs,
            ok: lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    pub level: CurveAnalysis,
    pub properness: Properness,
    pub tree: Vec<SingularityNode>,
    pub budget: Budget,
    pub verifications: Vec<Check>,
}

impl AnalysisReport {
    pub fn curve(&self) -> &CurveSpec {
        &self.level.curve
    }

    pub fn basis(&self) -> &MuBasis {
        &self.level.basis
    }

    pub fn smith(&self) -> &MainSmith {
        &self.level.smith
    }

    /// All nodes, depth first.
    pub fn nodes(&self) -> Vec<&SingularityNode> {
        self.tree.iter().flat_map(|n| n.walk()).collect()
    }

    pub fn height(&self) -> usize {
        self.tree.iter().map(|n| n.height()).max().unwrap_or(0)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.verifications.iter().filter(|c| c.failed()).collect()
    }
}

/// Full analysis: μ-basis, properness, Smith form, singular points,
/// blow-up tree and the budget identities.
pub fn analyze(curve: &CurveSpec, opts: &Options) -> Result<AnalysisReport> {
    let mut checks = Vec::new();
    let basis = compute_mubasis(curve)?;
    let properness = check_proper(curve, &basis)?;
    if !properness.proper {
        return Err(Error::ImproperParametrization {
            degree: properness.degree,
            implicit_degree: properness.implicit_degree,
        });
    }
    let level = analyze_with_basis(curve, basis, &mut checks)?;
    let tree = attribute(&level, opts, &mut checks)?;
    let budget = Budget::of(&level);
    checks.push(Check::expect(
        "budget",
        budget.ok,
        format!(
            "sum (k-1) deg d_k = {}, (n-1)(n-2) = {}",
            budget.lhs, budget.rhs
        ),
    ));
    let tree_total: usize = tree
        .iter()
        .flat_map(|n| n.walk())
        .map(|n| n.budget_share())
        .sum();
    checks.push(Check::expect(
        "tree-budget",
        tree_total == budget.lhs,
        format!(
            "sum over nodes (order-1) deg formula = {tree_total}, d-chain total = {}",
            budget.lhs
        ),
    ));
    Ok(AnalysisReport {
        level,
        properness,
        tree,
        budget,
        verifications: checks,
    })
}

/// `analyze` with every rational point confirmed by blow-up, followed by
/// the full set of independent cross-checks.
pub fn verify(curve: &CurveSpec, opts: &Options) -> Result<AnalysisReport> {
    let opts = Options {
        confirm_leaves: true,
        ..opts.clone()
    };
    let mut report = analyze(curve, &opts)?;
    let extra = checks::run_all(&report, &opts)?;
    report.verifications.extend(extra);
    Ok(report)
}
