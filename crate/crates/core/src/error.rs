use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate triangle (signed area {area:e})")]
    DegenerateTriangle { area: f64 },

    #[error("invalid mesh spacing h0 = {h0}: {reason}")]
    InvalidSpacing { h0: f64, reason: String },

    #[error("mesh generation did not converge after {iterations} iterations (last max displacement {last_displacement:e} h0)")]
    GenerationFailed {
        iterations: usize,
        last_displacement: f64,
    },

    #[error("Delaunay triangulation failed: {0}")]
    Triangulation(String),

    #[error("corner triangle {triangle} cannot be repaired: {reason}")]
    RepairFailed { triangle: usize, reason: String },

    #[error("unsupported quadrature degree {0} (supported: 1..=20)")]
    UnsupportedDegree(usize),

    #[error("unknown benchmark problem {0} (expected 1..=7)")]
    UnknownProblem(usize),

    #[error("zero pivot in incomplete factorization at row {row}")]
    ZeroPivot { row: usize },

    #[error("matrix is singular to working precision (pivot {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },

    #[error("every solver attempt failed: {0}")]
    SolveFailed(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("rate fit needs at least 3 positive (h, error) pairs: {0}")]
    FitDomain(String),

    #[error("degenerate error report: {0}")]
    DegenerateReport(String),

    #[error("mesh file parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
