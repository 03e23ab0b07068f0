use thiserror::Error;

/// Errors shared across the library.
///
/// Variants split into three broad classes: structural misuse (mismatched
/// rings, malformed arguments), inputs outside the supported classes
/// (irrational support, non-monomial ideals where monomial machinery is
/// required), and verification failures surfaced as errors
/// (`NotFirstOrderFlat`).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials belong to different ring contexts")]
    MismatchedContext,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("operation requires parameter-free coefficients; specialize the parameters first")]
    ParametersPresent,
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("the zero ideal is not supported here")]
    ZeroIdeal,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("ideal is not generated by monomials")]
    NotMonomial,
    #[error("ideal is outside the supported classes (zero-dimensional or monomial)")]
    UnsupportedClass,
    #[error("radical not computable: ideal is neither zero-dimensional nor monomial")]
    UnsupportedRadical,
    #[error("ideal is not primary")]
    NotPrimary,
    #[error("support contains non-rational points")]
    NonRationalSupport,
    #[error("point does not lie on the scheme")]
    PointNotOnScheme,
    #[error("kept variables must form a prefix x_1..x_k of the variable order")]
    KeepNotPrefix,
    #[error("saturation by the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires exactly one parameter")]
    MultiParameter,
    #[error("missing value for parameter `{0}`")]
    MissingParameterValue(String),
    #[error("family is not flat to first order: germ fails the homomorphism constraints")]
    NotFirstOrderFlat,
    #[error("ideal is not supported at the origin")]
    SupportNotOrigin,
    #[error("already in a single variable; smoothing step needs at least two")]
    SingleVariable,
    #[error("family base does not match the given ideal")]
    BaseMismatch,
    #[error("tangent vector shape does not match the ideal")]
    ShapeMismatch,
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
