use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped so a front end can map them onto distinct exit
/// statuses: bad input, a failed mathematical cross-check, or an analysis
/// that ran out of its configured search/recursion budget.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("zero polynomial not allowed here: {0}")]
    ZeroPolynomial(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("polynomial does not vanish on the diagonal (s:u)=(t:v)")]
    DiagonalNonVanishing,

    #[error("evaluation point (0,0) is not a projective point")]
    ZeroPoint,

    #[error("input is not squarefree")]
    NotSquarefree,

    #[error("zero matrix")]
    ZeroMatrix,

    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    #[error("improper parametrization: implicit degree {implicit_degree} but parametrization degree {degree}")]
    ImproperParametrization {
        degree: usize,
        implicit_degree: usize,
    },

    #[error("invalid mu-basis: {0}")]
    InvalidMuBasis(String),

    #[error("structural failure: {0}")]
    Structure(String),

    #[error("inconsistent analysis: {0}")]
    Inconsistent(String),

    #[error("analysis incomplete: {0}")]
    Incomplete(String),

    #[error("coordinate search exhausted (bound {bound}), tried: {}", tried.join("; "))]
    SearchExhausted { bound: usize, tried: Vec<String> },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by the input itself (as opposed to a failed
    /// internal cross-check or an exhausted budget).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::DegenerateCurve(_)
                | Error::ImproperParametrization { .. }
                | Error::ZeroPolynomial(_)
                | Error::DegreeMismatch(_)
                | Error::ZeroPoint
                | Error::Io(_)
        )
    }

    pub fn is_incomplete(&self) -> bool {
        matches!(self, Error::Incomplete(_) | Error::SearchExhausted { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
