use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field GF({p}^{k}) exceeds the supported size 2^16")]
    FieldTooLarge { p: u64, k: u32 },

    #[error("no irreducible polynomial of degree {k} over GF({p}) found")]
    NoIrreducible { p: u64, k: u32 },

    #[error("field element shape does not match GF({p}^{k})")]
    FieldShape { p: u64, k: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("group order exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("generators have inconsistent shapes")]
    InconsistentGenerators,

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters: {0}")]
    InvalidParameter(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("theorem `{id}` expects {expected} input(s)")]
    Arity { id: String, expected: &'static str },

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("unknown export format `{0}`")]
    UnknownFormat(String),

    #[error("twin cap must be at least 1")]
    BadTwinCap,

    #[error("failed to build `{spec}`: {source}")]
    Build {
        spec: String,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
