//! Curve input and report output.
//!
//! Every document serializes with a fixed key order and `p/q` rational
//! text, so parsing a report and writing it back reproduces it byte for
//! byte. The text renderings are produced from the same documents.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mubasis::{check_proper, compute_mubasis, verify_mubasis, CurveSpec, MuBasis};
use crate::poly::parse::parse_hpoly;
use crate::poly::{format_q, parse_q, HPoly, Interval, Vars, Q};
use crate::polymat::HPolyMat;
use crate::singularity::checks::{compare_four, four_matrices};
use crate::singularity::{AnalysisReport, MainSmith, SingularityNode};
use crate::verify::{Check, Status};

/// A curve component given either as ascending coefficient strings or in
/// the polynomial text syntax.
#[derive(Deserialize)]
#[serde(untagged)]
enum ComponentInput {
    Coeffs(Vec<String>),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveInput {
    degree: Option<usize>,
    a: ComponentInput,
    b: ComponentInput,
    c: ComponentInput,
}

/// Canonical curve document: ascending `t`-power coefficient strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub degree: usize,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
}

impl CurveDoc {
    pub fn of(curve: &CurveSpec) -> Self {
        let coeffs = |h: &HPoly| h.coeffs().iter().map(format_q).collect();
        CurveDoc {
            degree: curve.n,
            a: coeffs(&curve.a),
            b: coeffs(&curve.b),
            c: coeffs(&curve.c),
        }
    }

    pub fn to_curve(&self) -> Result<CurveSpec> {
        let comp = |name: &str, v: &[String]| coeffs_to_hpoly(name, v, Some(self.degree));
        CurveSpec::new(
            comp("a", &self.a)?,
            comp("b", &self.b)?,
            comp("c", &self.c)?,
        )
    }

    fn text(&self, out: &mut String) {
        let show = |v: &[String]| -> String {
            let c: Vec<Q> = v.iter().filter_map(|s| parse_q(s)).collect();
            HPoly::new(self.degree, c)
                .map(|h| h.fmt_vars(Vars::TV))
                .unwrap_or_default()
        };
        let _ = writeln!(out, "curve: degree {}", self.degree);
        let _ = writeln!(out, "  a = {}", show(&self.a));
        let _ = writeln!(out, "  b = {}", show(&self.b));
        let _ = writeln!(out, "  c = {}", show(&self.c));
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn coeffs_to_hpoly(name: &str, v: &[String], degree: Option<usize>) -> Result<HPoly> {
    if v.is_empty() {
        return Err(parse_error(
            1,
            1,
            format!("component {name} has no coefficients"),
        ));
    }
    if let Some(d) = degree {
        if v.len() != d + 1 {
            return Err(parse_error(
                1,
                1,
                format!(
                    "component {name} has {} coefficients, degree {d} needs {}",
                    v.len(),
                    d + 1
                ),
            ));
        }
    }
    let c = v
        .iter()
        .enumerate()
        .map(|(i, s)| {
            parse_q(s).ok_or_else(|| {
                parse_error(
                    1,
                    1,
                    format!("component {name}, coefficient {i}: '{s}' is not a rational"),
                )
            })
        })
        .collect::<Result<Vec<Q>>>()?;
    HPoly::new(v.len() - 1, c)
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

/// Shift a parse error inside a piece to coordinates in the whole text.
fn relocate(e: Error, text: &str, start: usize) -> Error {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => {
            let (l0, c0) = line_col(text, start);
            let column = if line == 1 { column + c0 - 1 } else { column };
            Error::Parse {
                line: line + l0 - 1,
                column,
                message,
            }
        }
        other => other,
    }
}

/// Pieces of a text curve split at top-level `,`, `;` or newlines, with
/// their byte offsets.
fn split_components(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ';' | '\n' if depth == 0 => {
                out.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &text[start..]));
    out.into_iter()
        .filter(|(_, s)| !s.trim().is_empty())
        .collect()
}

/// Strip a leading `a =` or `a:` label.
fn strip_label(piece: &str) -> (usize, &str) {
    let t = piece.trim_start();
    let lead = piece.len() - t.len();
    for (k, ch) in t.char_indices() {
        if ch == '=' || ch == ':' {
            let label = t[..k].trim();
            if matches!(label, "a" | "b" | "c" | "x" | "y" | "w") {
                return (lead + k + 1, &t[k + 1..]);
            }
            break;
        }
        if !(ch.is_alphabetic() || ch.is_whitespace()) {
            break;
        }
    }
    (0, piece)
}

fn parse_text_curve(text: &str) -> Result<CurveSpec> {
    let trimmed = text.trim();
    let body_start = text.len() - text.trim_start().len();
    let (inner, offset) = match trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(s) => (s, body_start + 1),
        None => (trimmed, body_start),
    };
    let pieces = split_components(inner);
    if pieces.len() != 3 {
        return Err(parse_error(
            1,
            1,
            format!("expected three components a, b, c, found {}", pieces.len()),
        ));
    }
    let mut forms = Vec::with_capacity(3);
    for (start, piece) in &pieces {
        let (skip, body) = strip_label(piece);
        let at = offset + start + skip;
        let f = parse_hpoly(body, Vars::TV, None).map_err(|e| relocate(e, text, at))?;
        forms.push(f);
    }
    let n = forms.iter().map(HPoly::degree).max().unwrap_or(0);
    let forms: Vec<HPoly> = forms
        .into_iter()
        .map(|f| if f.is_zero() { HPoly::zero(n) } else { f })
        .collect();
    let [a, b, c]: [HPoly; 3] = forms.try_into().expect("three components");
    CurveSpec::new(a, b, c)
}

fn component(name: &str, c: ComponentInput, degree: Option<usize>) -> Result<HPoly> {
    match c {
        ComponentInput::Coeffs(v) => coeffs_to_hpoly(name, &v, degree),
        ComponentInput::Text(s) => parse_hpoly(&s, Vars::TV, None)
            .map(|f| {
                if f.is_zero() {
                    HPoly::zero(degree.unwrap_or(0))
                } else {
                    f
                }
            })
            .map_err(|e| match e {
                Error::Parse { message, .. } => {
                    parse_error(1, 1, format!("component {name}: {message}"))
                }
                other => other,
            }),
    }
}

/// Parse a curve from JSON (`{degree, a, b, c}`) or from the text syntax
/// `(a, b, c)` with one form per component.
pub fn parse_curve(text: &str) -> Result<CurveSpec> {
    if !text.trim_start().starts_with('{') {
        return parse_text_curve(text);
    }
    let input: CurveInput =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let a = component("a", input.a, input.degree)?;
    let degree = input.degree.or(Some(a.degree()));
    let b = component("b", input.b, degree)?;
    let c = component("c", input.c, degree)?;
    let n = [&a, &b, &c].iter().map(|f| f.degree()).max().unwrap_or(0);
    let pad = |f: HPoly| if f.is_zero() { HPoly::zero(n) } else { f };
    CurveSpec::new(pad(a), pad(b), pad(c))
}

/// `{rows, cols, entries}` with entries in the text syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn of(m: &HPolyMat, vars: Vars) -> Self {
        MatrixDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.fmt_rows(vars),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DFactorDoc {
    pub k: usize,
    pub factor: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetDoc {
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub level: usize,
    pub order: usize,
    pub formula: String,
    pub factors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<[String; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub intervals: Vec<[String; 2]>,
    pub children: Vec<NodeDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ancestor_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribution: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unattributed: Vec<DFactorDoc>,
}

impl NodeDoc {
    pub fn of(n: &SingularityNode) -> Self {
        let iv = |i: &Interval| [format_q(&i.lo), format_q(&i.hi)];
        NodeDoc {
            level: n.level,
            order: n.order,
            formula: n.formula.fmt_vars(Vars::TV),
            factors: n.factors.iter().map(|f| f.fmt_vars(Vars::TV)).collect(),
            point: n
                .point
                .as_ref()
                .map(|p| std::array::from_fn(|i| format_q(&p[i]))),
            params: n
                .params
                .iter()
                .map(|(t, v)| [format_q(t), format_q(v)])
                .collect(),
            intervals: n.intervals.iter().map(iv).collect(),
            children: n.children.iter().map(NodeDoc::of).collect(),
            ancestor_order: n.ancestor_order,
            attribution: n.attribution.clone(),
            unattributed: n
                .unattributed
                .iter()
                .map(|(k, p)| DFactorDoc {
                    k: *k,
                    factor: p.fmt_vars(Vars::TV),
                })
                .collect(),
        }
    }

    /// Every node of the subtree, parents before children.
    pub fn walk(&self) -> Vec<&NodeDoc> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }

    fn text(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        let mut line = format!(
            "{pad}- level {} order {} formula {}",
            self.level, self.order, self.formula
        );
        match &self.point {
            Some(p) => {
                let _ = write!(line, " at ({}, {}, {})", p[0], p[1], p[2]);
            }
            None => {
                let _ = write!(line, " conjugate [{}]", self.factors.join(", "));
            }
        }
        if !self.params.is_empty() {
            let ps: Vec<String> = self
                .params
                .iter()
                .map(|[t, v]| format!("({t}:{v})"))
                .collect();
            let _ = write!(line, " params {}", ps.join(" "));
        }
        if !self.intervals.is_empty() {
            let is: Vec<String> = self
                .intervals
                .iter()
                .map(|[lo, hi]| format!("[{lo}, {hi}]"))
                .collect();
            let _ = write!(line, " roots {}", is.join(" "));
        }
        if let Some(k) = self.ancestor_order {
            let _ = write!(line, " over order {k}");
        }
        if let Some(a) = &self.attribution {
            let _ = write!(line, " ({a})");
        }
        for u in &self.unattributed {
            let _ = write!(line, " unattributed d_{} share {}", u.k, u.factor);
        }
        let _ = writeln!(out, "{line}");
        for c in &self.children {
            c.text(out, indent + 1);
        }
    }
}

fn smith_docs(ms: &MainSmith) -> (Vec<String>, Vec<DFactorDoc>) {
    let smith = ms.invariants.iter().map(|f| f.fmt_vars(Vars::SU)).collect();
    let d_chain = ms
        .d_chain
        .iter()
        .enumerate()
        .map(|(i, d)| DFactorDoc {
            k: i + 2,
            factor: d.fmt_vars(Vars::SU),
        })
        .collect();
    (smith, d_chain)
}

fn checks_text(out: &mut String, checks: &[Check]) {
    if checks.is_empty() {
        return;
    }
    let _ = writeln!(out, "verifications:");
    for c in checks {
        let _ = writeln!(out, "  {c}");
    }
}

fn smith_text(out: &mut String, smith: &[String], d_chain: &[DFactorDoc]) {
    let _ = writeln!(out, "smith: [{}]", smith.join(", "));
    for d in d_chain {
        let _ = writeln!(out, "d_{} = {}", d.k, d.factor);
    }
}

/// Full analysis report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub curve: CurveDoc,
    pub mu: usize,
    pub smith: Vec<String>,
    pub d_chain: Vec<DFactorDoc>,
    pub singularities: Vec<NodeDoc>,
    pub budget: BudgetDoc,
    pub verifications: Vec<Check>,
}

impl ReportDoc {
    pub fn of(r: &AnalysisReport) -> Self {
        let (smith, d_chain) = smith_docs(r.smith());
        ReportDoc {
            curve: CurveDoc::of(r.curve()),
            mu: r.basis().mu,
            smith,
            d_chain,
            singularities: r.tree.iter().map(NodeDoc::of).collect(),
            budget: BudgetDoc {
                lhs: r.budget.lhs,
                rhs: r.budget.rhs,
                ok: r.budget.ok,
            },
            verifications: r.verifications.clone(),
        }
    }

    /// Every node, depth first.
    pub fn nodes(&self) -> Vec<&NodeDoc> {
        self.singularities.iter().flat_map(|n| n.walk()).collect()
    }

    /// Same report with the tree cut down to level-0 points.
    pub fn top_level(&self) -> Self {
        let mut out = self.clone();
        for n in &mut out.singularities {
            n.children.clear();
        }
        out
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        self.curve.text(&mut out);
        let _ = writeln!(out, "mu: {}", self.mu);
        smith_text(&mut out, &self.smith, &self.d_chain);
        if self.singularities.is_empty() {
            let _ = writeln!(out, "singularities: none");
        } else {
            let _ = writeln!(out, "singularities:");
            for n in &self.singularities {
                n.text(&mut out, 1);
            }
        }
        let _ = writeln!(
            out,
            "budget: {} = {} {}",
            self.budget.lhs,
            self.budget.rhs,
            if self.budget.ok { "ok" } else { "VIOLATED" }
        );
        checks_text(&mut out, &self.verifications);
        out
    }
}

/// μ-basis of a curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuBasisDoc {
    pub curve: CurveDoc,
    pub mu: usize,
    pub p: [String; 3],
    pub q: [String; 3],
    pub verifications: Vec<Check>,
}

impl MuBasisDoc {
    pub fn of(curve: &CurveSpec, basis: &MuBasis) -> Self {
        let (checks, _) = verify_mubasis(curve, basis);
        MuBasisDoc {
            curve: CurveDoc::of(curve),
            mu: basis.mu,
            p: basis.p.fmt_vars(Vars::TV),
            q: basis.q.fmt_vars(Vars::TV),
            verifications: checks,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        self.curve.text(&mut out);
        let _ = writeln!(out, "mu: {}", self.mu);
        let _ = writeln!(out, "p = ({})", self.p.join(", "));
        let _ = writeln!(out, "q = ({})", self.q.join(", "));
        checks_text(&mut out, &self.verifications);
        out
    }
}

/// Implicit equation in `(x, y, w)` and the properness verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImplicitDoc {
    pub curve: CurveDoc,
    pub implicit: String,
    pub implicit_degree: usize,
    pub proper: bool,
}

impl ImplicitDoc {
    pub fn of(curve: &CurveSpec) -> Result<Self> {
        let basis = compute_mubasis(curve)?;
        let p = check_proper(curve, &basis)?;
        Ok(ImplicitDoc {
            curve: CurveDoc::of(curve),
            implicit: p.implicit.normalized().to_string(),
            implicit_degree: p.implicit_degree,
            proper: p.proper,
        })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        self.curve.text(&mut out);
        let _ = writeln!(out, "implicit: {} = 0", self.implicit);
        let _ = writeln!(
            out,
            "implicit degree {}: {}",
            self.implicit_degree,
            if self.proper { "proper" } else { "NOT proper" }
        );
        out
    }
}

/// `B_{t,v}(F, G)` and its Smith form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmithDoc {
    pub curve: CurveDoc,
    pub mu: usize,
    pub matrix: MatrixDoc,
    pub smith: Vec<String>,
    pub d_chain: Vec<DFactorDoc>,
}

impl SmithDoc {
    pub fn of(r: &AnalysisReport) -> Self {
        let (smith, d_chain) = smith_docs(r.smith());
        SmithDoc {
            curve: CurveDoc::of(r.curve()),
            mu: r.basis().mu,
            matrix: MatrixDoc::of(&r.smith().matrix, Vars::SU),
            smith,
            d_chain,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        self.curve.text(&mut out);
        let _ = writeln!(out, "mu: {}", self.mu);
        let _ = writeln!(out, "B(F,G) ({}x{}):", self.matrix.rows, self.matrix.cols);
        for row in &self.matrix.entries {
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
        smith_text(&mut out, &self.smith, &self.d_chain);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    pub name: String,
    pub smith: Vec<String>,
}

/// Smith forms of the four resultant matrices and their comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareDoc {
    pub curve: CurveDoc,
    pub forms: Vec<FormDoc>,
    pub verifications: Vec<Check>,
}

impl CompareDoc {
    pub fn of(r: &AnalysisReport) -> Result<Self> {
        let fm = four_matrices(r)?;
        let form = |name: &str, m: &HPolyMat, vars: Vars| -> Result<FormDoc> {
            let s = crate::singularity::smith_factors(m)?;
            Ok(FormDoc {
                name: name.into(),
                smith: s.iter().map(|f| f.fmt_vars(vars)).collect(),
            })
        };
        Ok(CompareDoc {
            curve: CurveDoc::of(r.curve()),
            forms: vec![
                form("hybrid (s,u) eliminated", &fm.form1, Vars::TV)?,
                form("B_tv(pP, qP)", &fm.form2, Vars::SU)?,
                form("B_su(L1 P, L2 P)", &fm.form3, Vars::TV)?,
                form("B_tv(L1 P, L2 P)", &fm.form4, Vars::SU)?,
            ],
            verifications: compare_four(r)?,
        })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        self.curve.text(&mut out);
        for f in &self.forms {
            let _ = writeln!(out, "{}: [{}]", f.name, f.smith.join(", "));
        }
        checks_text(&mut out, &self.verifications);
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))
}

/// Count of checks with each status, in `pass, fail, skip, log` order.
pub fn status_counts(checks: &[Check]) -> [usize; 4] {
    let mut out = [0; 4];
    for c in checks {
        let i = match c.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Skip => 2,
            Status::Logged => 3,
        };
        out[i] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::singularity::{analyze, Options};

    #[test]
    fn json_and_text_curves_agree() {
        let j = r#"{"degree": 3, "a": ["0", "0", "1", "0"], "b": ["0","0","0","1"], "c": ["1","0","0","0"]}"#;
        let t = "(t^2*v, t^3, v^3)";
        let l = "a = t^2*v\nb = t^3\nc = v^3\n";
        let mixed = r#"{"a": "t^2*v", "b": "t^3", "c": ["1","0","0","0"]}"#;
        let want = parse_curve(j).unwrap();
        assert_eq!(parse_curve(t).unwrap(), want);
        assert_eq!(parse_curve(l).unwrap(), want);
        assert_eq!(parse_curve(mixed).unwrap(), want);
        assert_eq!(CurveDoc::of(&want).to_curve().unwrap(), want);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_curve("(t^2*v, t^3 +, v^3)") {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 1);
                assert!(column > 8, "column {column}");
            }
            other => panic!("{other:?}"),
        }
        match parse_curve("a = t^2*v\nb = t^^3\nc = v^3") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        match parse_curve("{\"degree\": 3,\n \"a\": [1]}") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_curve("(t, v)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn rational_coefficients_print_as_fractions() {
        let c = parse_curve("(3/2*t^2 - v^2, t*v, v^2)").unwrap();
        let d = CurveDoc::of(&c);
        assert_eq!(d.a, vec!["-1", "0", "3/2"]);
    }

    #[test]
    fn report_round_trips() {
        let c = parse_curve("(t^2*v - v^3, t^3 - t*v^2, v^3)").unwrap();
        let r = analyze(
            &c,
            &Options {
                isolate_roots: true,
                ..Options::default()
            },
        )
        .unwrap();
        let doc = ReportDoc::of(&r);
        let s = to_json(&doc);
        let back: ReportDoc = from_json(&s).unwrap();
        assert_eq!(to_json(&back), s);
        assert_eq!(doc.singularities.len(), 1);
        assert_eq!(doc.singularities[0].formula, "t^2 - v^2");
        assert!(doc.text().contains("formula t^2 - v^2 at (0, 0, 1)"));
    }
}
