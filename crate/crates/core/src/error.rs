use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root iteration did not converge after {iterations} iterations (max residual {max_residual:e})")]
    NonConvergence {
        iterations: usize,
        max_residual: f64,
        residuals: Vec<f64>,
    },

    #[error("polynomial has a root of unity as a zero")]
    RootOfUnity,

    #[error("cyclic resultant r_{m} is zero")]
    ZeroResultant { m: usize },

    #[error("polynomial has non-real coefficients")]
    NonReal,

    #[error("sequence too short: need {needed} values, got {got}")]
    InsufficientLength { needed: usize, got: usize },

    #[error("internal cross-check failed at m = {m}: direct and companion resultants differ")]
    CrossCheck { m: usize },

    #[error("roots {0} and {1} are within clustering tolerance but not equal in exact data")]
    ClusterAmbiguity(String, String),

    #[error("dimension {got} exceeds the exhaustive-scan limit {max}")]
    DimensionTooLarge { got: usize, max: usize },

    #[error("matrix is not ergodic (an eigenvalue is a root of unity)")]
    NonErgodic,

    #[error("binomial factor {index} on the {side} side has a difference of finite order; the factorization theorem needs infinite order (compare (1-s)(1-s) = 2(1-s) in Z/2)")]
    FiniteOrder { side: String, index: usize },

    #[error("group element has finite order")]
    FiniteOrderElement { index: usize },

    #[error("malformed group data: {0}")]
    Group(String),

    #[error("polynomial is not reciprocal")]
    NotReciprocal,

    #[error("denominator {0} vanishes for this input")]
    DegenerateDenominator(String),

    #[error("closed-form {0} result does not reproduce the input resultants")]
    VerificationFailed(String),

    #[error("the resultant system has no solution (Groebner basis is <1>)")]
    UnitIdeal,

    #[error("the resultant system has infinitely many solutions; more values are needed")]
    PositiveDimensional,

    #[error("no Newton start converged")]
    NoConvergedStart,

    #[error("reconstruction is ambiguous: {0}")]
    Ambiguous(String),

    #[error("no sign pattern admits a reconstruction")]
    NoReconstruction,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    /// Structured fields of the error, for the CLI error channel.
    pub fn context(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            Error::Syntax { pos, msg } => json!({"pos": pos, "detail": msg}),
            Error::ZeroDenominator { pos } => json!({"pos": pos}),
            Error::NonConvergence {
                iterations,
                max_residual,
                residuals,
            } => json!({"iterations": iterations, "max_residual": max_residual, "residuals": residuals}),
            Error::ZeroResultant { m } | Error::CrossCheck { m } => json!({"m": m}),
            Error::InsufficientLength { needed, got } => json!({"needed": needed, "got": got}),
            Error::ClusterAmbiguity(a, b) => json!({"roots": [a, b]}),
            Error::DimensionTooLarge { got, max } => json!({"got": got, "max": max}),
            Error::FiniteOrder { side, index } => json!({"side": side, "index": index}),
            Error::FiniteOrderElement { index } => json!({"index": index}),
            Error::DegenerateDenominator(name) => json!({"denominator": name}),
            Error::VerificationFailed(name) => json!({"formula": name}),
            Error::InvalidArgument(d)
            | Error::Group(d)
            | Error::Ambiguous(d)
            | Error::Unsupported(d)
            | Error::Json(d) => json!({"detail": d}),
            _ => json!({}),
        }
    }

    /// Stable machine-readable code used by the CLI error channel.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::ZeroDenominator { .. } => "zero_denominator",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::NonConvergence { .. } => "non_convergence",
            Error::RootOfUnity => "root_of_unity",
            Error::ZeroResultant { .. } => "zero_resultant",
            Error::NonReal => "non_real",
            Error::InsufficientLength { .. } => "insufficient_length",
            Error::CrossCheck { .. } => "internal_cross_check",
            Error::ClusterAmbiguity(..) => "cluster_ambiguity",
            Error::DimensionTooLarge { .. } => "dimension_too_large",
            Error::NonErgodic => "non_ergodic",
            Error::FiniteOrder { .. } => "finite_order",
            Error::FiniteOrderElement { .. } => "finite_order",
            Error::Group(_) => "group",
            Error::NotReciprocal => "not_reciprocal",
            Error::DegenerateDenominator(_) => "degenerate_denominator",
            Error::VerificationFailed(_) => "verification_failed",
            Error::UnitIdeal => "unit_ideal",
            Error::PositiveDimensional => "positive_dimensional",
            Error::NoConvergedStart => "no_converged_start",
            Error::Ambiguous(_) => "ambiguous",
            Error::NoReconstruction => "no_reconstruction",
            Error::Unsupported(_) => "unsupported",
            Error::Json(_) => "json",
        }
    }
}
