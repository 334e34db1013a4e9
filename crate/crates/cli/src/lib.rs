//! Command-line front end: read a curve, run one pipeline stage, print a
//! JSON or text report, and map the outcome onto an exit status.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use ratsing::io::{parse_curve, to_json, CompareDoc, ImplicitDoc, MuBasisDoc, ReportDoc, SmithDoc};
use ratsing::mubasis::{compute_mubasis, CurveSpec};
use ratsing::singularity::{analyze, verify, Options};
use ratsing::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Mubasis,
    Implicit,
    Smith,
    Singularities,
    Tree,
    Verify,
    CompareMatrices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exact singularity analysis of rational planar curves.
#[derive(Clone, Debug, Parser)]
#[command(name = "ratsing", version)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "curve", "corpus"])))]
pub struct RunConfig {
    /// Curve file: JSON `{degree, a, b, c}` or text `(a, b, c)`; `-` reads stdin
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Inline curve in either syntax, e.g. "(t^2*v, t^3, v^3)"
    #[arg(long)]
    pub curve: Option<String>,
    /// Directory of curve files analyzed as a batch
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Command::Singularities)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Deepest blow-up level before the analysis is declared incomplete
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_depth: u32,
    /// Largest shear coefficient tried when moving a point to the origin
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
    pub coord_bound: u32,
    /// Report isolating intervals for the real roots of each formula
    #[arg(long)]
    pub isolate_roots: bool,
}

impl RunConfig {
    pub fn options(&self) -> Options {
        Options {
            max_depth: self.max_depth as usize,
            coord_bound: self.coord_bound as usize,
            isolate_roots: self.isolate_roots,
            ..Options::default()
        }
    }
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else if e.is_incomplete() {
        EXIT_INCOMPLETE
    } else {
        EXIT_VERIFY
    }
}

fn read_source(path: &Path) -> Result<String, Error> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin())
            .map_err(|e| Error::Io(format!("stdin: {e}")));
    }
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn render<T: Serialize>(doc: &T, text: impl FnOnce(&T) -> String, format: Format) -> String {
    match format {
        Format::Json => to_json(doc),
        Format::Text => text(doc),
    }
}

/// Output of one command on one curve, and whether any check failed.
fn run_command(curve: &CurveSpec, cfg: &RunConfig) -> Result<(String, bool), Error> {
    let opts = cfg.options();
    let f = cfg.format;
    Ok(match cfg.command {
        Command::Mubasis => {
            let doc = MuBasisDoc::of(curve, &compute_mubasis(curve)?);
            let failed = doc.verifications.iter().any(|c| c.failed());
            (render(&doc, MuBasisDoc::text, f), failed)
        }
        Command::Implicit => {
            let doc = ImplicitDoc::of(curve)?;
            (render(&doc, ImplicitDoc::text, f), false)
        }
        Command::Smith => {
            let r = analyze(curve, &opts)?;
            (
                render(&SmithDoc::of(&r), SmithDoc::text, f),
                !r.failed_checks().is_empty(),
            )
        }
        Command::Singularities | Command::Tree => {
            let r = analyze(curve, &opts)?;
            let full = ReportDoc::of(&r);
            let doc = if cfg.command == Command::Tree {
                full
            } else {
                full.top_level()
            };
            (
                render(&doc, ReportDoc::text, f),
                !r.failed_checks().is_empty(),
            )
        }
        Command::Verify => {
            let r = verify(curve, &opts)?;
            (
                render(&ReportDoc::of(&r), ReportDoc::text, f),
                !r.failed_checks().is_empty(),
            )
        }
        Command::CompareMatrices => {
            let r = analyze(curve, &opts)?;
            let doc = CompareDoc::of(&r)?;
            let failed = doc.verifications.iter().any(|c| c.failed());
            (render(&doc, CompareDoc::text, f), failed)
        }
    })
}

fn single(text: &str, cfg: &RunConfig) -> Outcome {
    let result = parse_curve(text).and_then(|c| run_command(&c, cfg));
    match result {
        Ok((stdout, failed)) => Outcome {
            code: if failed { EXIT_VERIFY } else { EXIT_OK },
            stdout,
            stderr: if failed {
                "error: a verification check failed\n".into()
            } else {
                String::new()
            },
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// One row of the batch table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub file: String,
    pub degree: Option<usize>,
    pub mu: Option<usize>,
    /// Level-0 singularity counts keyed by order.
    pub orders: BTreeMap<usize, usize>,
    pub infinitely_near: usize,
    pub budget_ok: Option<bool>,
    pub exit: i32,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub reports: Vec<CorpusEntry>,
    pub table: Vec<CorpusRow>,
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, Error> {
    let rd = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = rd
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file() && matches!(p.extension().and_then(|x| x.to_str()), Some("json" | "txt"))
        })
        .collect();
    files.sort();
    Ok(files)
}

fn corpus_one(path: &Path, cfg: &RunConfig) -> (CorpusEntry, CorpusRow) {
    let file = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let opts = cfg.options();
    let result = read_source(path)
        .and_then(|t| parse_curve(&t))
        .and_then(|c| {
            if cfg.command == Command::Verify {
                verify(&c, &opts)
            } else {
                analyze(&c, &opts)
            }
        });
    match result {
        Ok(r) => {
            let doc = ReportDoc::of(&r);
            let mut orders = BTreeMap::new();
            for n in &doc.singularities {
                *orders.entry(n.order).or_insert(0) += 1;
            }
            let near = doc.nodes().iter().filter(|n| n.level > 0).count();
            let failed = !r.failed_checks().is_empty();
            let row = CorpusRow {
                file: file.clone(),
                degree: Some(doc.curve.degree),
                mu: Some(doc.mu),
                orders,
                infinitely_near: near,
                budget_ok: Some(doc.budget.ok),
                exit: if failed { EXIT_VERIFY } else { EXIT_OK },
                error: failed.then(|| "verification check failed".to_string()),
            };
            (
                CorpusEntry {
                    file,
                    report: Some(doc),
                    error: None,
                },
                row,
            )
        }
        Err(e) => {
            let msg = e.to_string();
            let row = CorpusRow {
                file: file.clone(),
                degree: None,
                mu: None,
                orders: BTreeMap::new(),
                infinitely_near: 0,
                budget_ok: None,
                exit: exit_code(&e),
                error: Some(msg.clone()),
            };
            (
                CorpusEntry {
                    file,
                    report: None,
                    error: Some(msg),
                },
                row,
            )
        }
    }
}

fn table_text(rows: &[CorpusRow]) -> String {
    let mut out = String::new();
    let w = rows.iter().map(|r| r.file.len()).max().unwrap_or(4).max(4);
    let _ = writeln!(
        out,
        "{:<w$}  {:>6}  {:>3}  {:<16}  {:>4}  {:<8}  status",
        "file", "degree", "mu", "orders", "near", "budget"
    );
    for r in rows {
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let orders: Vec<String> = r.orders.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        let orders = if orders.is_empty() {
            "-".to_string()
        } else {
            orders.join(" ")
        };
        let budget = match r.budget_ok {
            Some(true) => "ok",
            Some(false) => "VIOLATED",
            None => "-",
        };
        let status = match &r.error {
            None => "ok".to_string(),
            Some(e) => format!("failed: {e}"),
        };
        let _ = writeln!(
            out,
            "{:<w$}  {:>6}  {:>3}  {:<16}  {:>4}  {:<8}  {status}",
            r.file,
            opt(r.degree),
            opt(r.mu),
            orders,
            r.infinitely_near,
            budget
        );
    }
    out
}

/// Analyze every `.json` / `.txt` file of a directory, in filename order.
pub fn batch(dir: &Path, cfg: &RunConfig) -> Outcome {
    let files = match corpus_files(dir) {
        Ok(f) => f,
        Err(e) => {
            return Outcome {
                code: exit_code(&e),
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let results: Vec<(CorpusEntry, CorpusRow)> =
        files.par_iter().map(|p| corpus_one(p, cfg)).collect();
    let (reports, table): (Vec<CorpusEntry>, Vec<CorpusRow>) = results.into_iter().unzip();
    let code = table.iter().map(|r| r.exit).max().unwrap_or(EXIT_OK);
    let stderr: String = table
        .iter()
        .filter_map(|r| r.error.as_ref().map(|e| format!("{}: {e}\n", r.file)))
        .collect();
    let stdout = match cfg.format {
        Format::Json => to_json(&CorpusReport { reports, table }),
        Format::Text => {
            let mut out = String::new();
            for e in &reports {
                let _ = writeln!(out, "== {}", e.file);
                match (&e.report, &e.error) {
                    (Some(r), _) => out.push_str(&r.text()),
                    (None, Some(err)) => {
                        let _ = writeln!(out, "error: {err}");
                    }
                    (None, None) => {}
                }
                out.push('\n');
            }
            out.push_str(&table_text(&table));
            out
        }
    };
    Outcome {
        code,
        stdout,
        stderr,
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    if let Some(dir) = &cfg.corpus {
        return batch(dir, cfg);
    }
    let text = match (&cfg.curve, &cfg.input) {
        (Some(c), _) => c.clone(),
        (None, Some(p)) => match read_source(p) {
            Ok(t) => t,
            Err(e) => {
                return Outcome {
                    code: exit_code(&e),
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        },
        (None, None) => unreachable!("clap requires a source"),
    };
    single(&text, cfg)
}
