use thiserror::Error;

/// Errors raised by the algebra, group and verdict layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of order {p}^{k} exceeds 2^16 elements")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("modulus is not irreducible over F_{0}")]
    ModulusNotIrreducible(u32),
    #[error("field F_{small} does not embed into F_{big}")]
    NotSubfield { small: u32, big: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("element is not unipotent")]
    NotUnipotent,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("unsupported root system type: {0}")]
    UnsupportedType(String),
    #[error("cocharacter carries a nontrivial conjugator")]
    ConjugatedCocharacter,
    #[error("cocharacter does not define a Borel subgroup")]
    NotBorel,
    #[error("invalid cocharacter: {0}")]
    InvalidCocharacter(String),
    #[error("unsupported realization: {0}")]
    UnsupportedRealization(String),
    #[error("{what}: cap of {cap} exceeded after {partial} elements")]
    CapExceeded { what: String, partial: usize, cap: usize },
    #[error("endomorphism does not stabilize the group")]
    NotStable,
    #[error("field too small: {0}")]
    FieldTooSmall(String),
    #[error("wrong characteristic: expected {expected}, found {found}")]
    WrongCharacteristic { expected: u32, found: u32 },
    #[error("group closure unavailable")]
    ClosureUnavailable,
    #[error("subgroup is not a Borel subgroup of the group")]
    NotABorel,
    #[error("Lie algebra constraint violated")]
    ConstraintViolated,
    #[error("element is not nilpotent")]
    NotNilpotent,
    #[error("element is not regular unipotent")]
    NotRegular,
    #[error("element is not contained in the subgroup")]
    NotContained,
    #[error("module dimension {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("no Borel subgroup is normalized by the element")]
    NoNormalizedBorel,
    #[error("no element found at level {level}")]
    NoneFound { level: u32 },
    #[error("unknown scenario: {0}")]
    UnknownScenario(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
