use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A size limit from [`crate::Bounds`] was exceeded.
    #[error("{what} of size {size} exceeds the configured bound {bound}")]
    Capacity {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("malformed Cayley table at line {line}: {message}")]
    CayleyParse { line: usize, message: String },

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("index {index} out of range for size {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("cannot build a lattice from an empty poset")]
    EmptyPoset,

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("elements {a} and {b} have no {kind}")]
    NotALattice { a: usize, b: usize, kind: &'static str },

    #[error("invalid unary algebra: {0}")]
    InvalidAlgebra(String),

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error(
        "{group} is a Dedekind group; every subgroup is normal, so the construction \
         yields isomorphic congruence lattices (pass allow_dedekind to build it anyway)"
    )]
    DedekindGroupRejected { group: String },

    /// An internal consistency check failed. This always indicates a bug.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    pub(crate) fn capacity(what: &'static str, size: usize, bound: usize) -> Self {
        Error::Capacity { what, size, bound }
    }
}
