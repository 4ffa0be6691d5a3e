use alloc::string::String;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not below 2^31")]
    CharacteristicTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of size {p}^{degree} exceeds the cap of {cap} elements")]
    CapExceeded { p: u64, degree: u32, cap: u64 },
    #[error("no embedding of F_{small} into F_{large} is available")]
    MissingEmbedding { small: u64, large: u64 },
    #[error("defining polynomial of the base field has no root in the extension")]
    EmbeddingRootNotFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("the polynomial has Y-degree 0")]
    NoY,
    #[error("P(T, Y) is not squarefree in Y over F_q(T)")]
    NotSquarefree,
    #[error("P(T, Y) is reducible over F_q(T): it has the root Y = {0}")]
    Reducible(String),
    #[error("maximal extension degree must be at least 1")]
    ZeroExtension,
    #[error("the point is not defined over an extension of the base field")]
    PointField,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group closure exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error("{what} needs an odd prime, got {value}")]
    NotOddPrime { what: &'static str, value: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{ell} does not divide {q} - 1")]
    NoRootOfUnity { ell: u64, q: u64 },
    #[error("generators act on different sets")]
    UniverseMismatch,
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element is not in the group")]
    NotAnElement,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("group permutes {group} points but the cover has degree {cover}")]
    DegreeMismatch { group: usize, cover: usize },
    #[error("cycle-type coverage needs a permutation group")]
    NotPermutationGroup,
    #[error("{covers} covers but {groups} groups")]
    LengthMismatch { covers: usize, groups: usize },
    #[error("witness at m = {m}, t0 = {point} does not reproduce order {order}")]
    BadWitness { m: u32, point: String, order: u64 },
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
