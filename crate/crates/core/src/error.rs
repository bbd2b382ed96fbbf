use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{name} is not an involution")]
    NotInvolution { name: String },

    #[error("action is not transitive ({orbits} orbits)")]
    NotTransitive { orbits: usize },

    #[error("signature violation: {product} has order {order}, which does not divide {bound}")]
    SignatureViolation {
        product: String,
        order: u64,
        bound: u32,
    },

    #[error("internal parity failure: odd Euler numerator {numerator}")]
    InternalParity { numerator: i64 },

    #[error("internal classification failure: {0}")]
    InternalClassification(String),

    #[error("system is not orientable and closed (orientable: {orientable}, boundary components: {boundary})")]
    NotOrientableClosed { orientable: bool, boundary: usize },

    #[error("requested {requested} blades exceeds the census cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("values are not distinct")]
    NotDistinct,

    #[error("value {0} is not real")]
    NotReal(String),

    #[error("value {0} is real; a non-real value is required")]
    RealInput(String),

    #[error("critical set is not closed under complex conjugation")]
    NotConjugationClosed,

    #[error("critical set has {0} values; at most 3 are allowed")]
    TooManyValues(usize),

    #[error("{pairs} non-real conjugate pairs; at most one is supported")]
    TooManyNonRealPairs { pairs: usize },

    #[error("unsupported rational map of degree {degree}: {reason}")]
    DegreeUnsupported { degree: usize, reason: String },

    #[error("singular curve: g2^3 - 27 g3^2 = 0")]
    SingularCurve,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NotInvolution { .. } => "NotInvolution",
            Error::NotTransitive { .. } => "NotTransitive",
            Error::SignatureViolation { .. } => "SignatureViolation",
            Error::InternalParity { .. } => "InternalParity",
            Error::InternalClassification(_) => "InternalClassification",
            Error::NotOrientableClosed { .. } => "NotOrientableClosed",
            Error::CapExceeded { .. } => "CapExceeded",
            Error::NotDistinct => "NotDistinct",
            Error::NotReal(_) => "NotReal",
            Error::RealInput(_) => "RealInput",
            Error::NotConjugationClosed => "NotConjugationClosed",
            Error::TooManyValues(_) => "TooManyValues",
            Error::TooManyNonRealPairs { .. } => "TooManyNonRealPairs",
            Error::DegreeUnsupported { .. } => "DegreeUnsupported",
            Error::SingularCurve => "SingularCurve",
            Error::Parse(_) => "Parse",
        }
    }
}
