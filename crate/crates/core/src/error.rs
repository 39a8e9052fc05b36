use thiserror::Error;

/// Errors surfaced by the library operations.
#[derive(Debug, Error)]
pub enum CartanError {
    #[error("shape mismatch: expected {expected:?}, got {got:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        got: (usize, usize),
    },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("signature entries must be weakly decreasing and nonnegative")]
    InvalidSignature,

    #[error("operation requires rank {required}, domain has rank {got}")]
    RankUnsupported { required: usize, got: usize },

    #[error("fractional power undefined: base {value} lies on the closed negative real axis")]
    BranchCut { value: f64 },

    #[error("tuple is not commuting: max commutator norm {max_commutator:.3e} exceeds tol {tol:.3e}")]
    NotCommuting { max_commutator: f64, tol: f64 },

    #[error("simultaneous triangularization failed: {detail}")]
    TriangularizationFailed { detail: String },

    #[error("Cartan isometry certificate failed: max residual {residual:.3e}")]
    CertificateFailed { residual: f64 },

    #[error("input list is empty")]
    EmptyInput,

    #[error("Gram matrix indefinite beyond tolerance: pivot {pivot:.3e}")]
    IndefiniteGram { pivot: f64 },

    #[error("moment coverage exceeded: need degree {needed}, Gram covers {coverage}")]
    CoverageExceeded { needed: usize, coverage: usize },

    #[error("method/measure mismatch: {0}")]
    MethodMismatch(String),

    #[error("point fails the Shilov membership test: max residual {residual:.3e}")]
    NotOnShilov { residual: f64 },

    #[error("point is not in the open domain: spectral norm {norm}")]
    NotInterior { norm: f64 },

    #[error("tuple is not a diagonal normal fixture")]
    NotDiagonalFixture,

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CartanError>;
