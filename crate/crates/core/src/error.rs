use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("non-semisimple case out of scope: gcd(q={q}, |H|={order}) != 1")]
    NotSemisimple { q: u64, order: u64 },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("modulus {0} is not irreducible over the prime field")]
    ReducibleModulus(String),

    #[error("element is not in the subfield of degree {degree} over F_q")]
    NotInSubfield { degree: u32 },

    #[error("element is not in the ideal of cyclotomic class {class}")]
    NotInIdeal { class: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("field or group mismatch: {0}")]
    Mismatch(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("enumeration cap exceeded in {context}: cap {cap}, required {required}")]
    CapExceeded { context: String, cap: u64, required: u128 },

    #[error("minimum distance is undefined for the zero code")]
    ZeroCode,

    #[error("code is not closed under the group action (not quasi-abelian)")]
    NotQuasiAbelian,

    #[error("inner codes do not form a direct sum")]
    InnerSumNotDirect,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn cap(context: impl Into<String>, cap: u64, required: u128) -> Self {
        Error::CapExceeded {
            context: context.into(),
            cap,
            required,
        }
    }
}
