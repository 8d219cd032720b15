use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by a non-unit series (divisor valuation {divisor_valuation:?}, dividend valuation {dividend_valuation:?})")]
    DivisionByNonUnit {
        divisor_valuation: Option<usize>,
        dividend_valuation: Option<usize>,
    },
    #[error("series order {got} is below the required order {need}")]
    InsufficientOrder { need: usize, got: usize },
    #[error("malformed ODE: normalized coefficient c[{degree}] = {value} must vanish")]
    MalformedOde { degree: usize, value: String },
    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),
    #[error("unknown check item `{0}`")]
    UnknownItem(String),
    #[error("unknown series id `{0}`")]
    UnknownSeries(String),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("schema version {found} does not match supported version {expected}")]
    SchemaMismatch { expected: u32, found: u32 },
    #[error("corrupted series file: {0}")]
    CorruptedFile(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
