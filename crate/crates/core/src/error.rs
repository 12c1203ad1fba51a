use thiserror::Error;

/// Errors produced by group construction, enumeration, and parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: images are not a bijection on 0..{degree}")]
    NotABijection { degree: usize },

    #[error("closure exceeds cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },

    #[error("invalid order {order} for {family}: {reason}")]
    InvalidOrder {
        family: &'static str,
        order: usize,
        reason: &'static str,
    },

    #[error("subgroup is not normal in its parent")]
    NotNormal,

    #[error("action does not define an automorphism of the normal factor")]
    NotAnAutomorphism,

    #[error("action does not extend to a homomorphism from the acting group")]
    NotAHomomorphism,

    #[error("syntax error at byte {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown catalog group gid({order},{id})")]
    UnknownGid { order: usize, id: usize },

    #[error("catalog line {line}: {message}")]
    CatalogParse { line: usize, message: String },

    #[error(
        "catalog line {line}: generators close to {actual} elements, entry claims order {expected}"
    )]
    OrderMismatch {
        line: usize,
        expected: usize,
        actual: usize,
    },

    #[error("catalog line {line}: enumerated {actual} subgroups, entry claims {expected}")]
    SubMismatch {
        line: usize,
        expected: usize,
        actual: usize,
    },

    #[error("graph has {vertices} vertices, over the exact-solver cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
