use thiserror::Error;

use crate::algebra::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed tables: {0}")]
    Shape(String),

    #[error("lattice law `{law}` fails at {witness:?}")]
    LatticeLawViolation { law: &'static str, witness: Vec<Elem> },

    #[error("monoid law `{law}` fails at {witness:?}")]
    MonoidLawViolation { law: &'static str, witness: Vec<Elem> },

    #[error("residuation fails at a={a}, b={b}, c={c}: a <= b->c and a*b <= c disagree")]
    ResiduationViolation { a: Elem, b: Elem, c: Elem },

    #[error("distributivity fails at ({a}, {b}, {c})")]
    DistributivityViolation { a: Elem, b: Elem, c: Elem },

    #[error("map does not preserve `{op}` at {args:?}")]
    OperationNotPreserved { op: &'static str, args: Vec<Elem> },

    #[error("{what}: size {size} exceeds the configured bound {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("subset is not closed under `{op}`: {a}, {b} gives {result}")]
    NotClosed {
        op: &'static str,
        a: Elem,
        b: Elem,
        result: Elem,
    },

    #[error("not a filter: {0}")]
    NotAFilter(String),

    #[error("invalid inductive system: {0}")]
    InvalidSystem(String),

    #[error("element {element} has no pseudocomplement")]
    NotPseudocomplemented { element: Elem },

    #[error("not a Boolean algebra: element {element} has no complement")]
    NotBoolean { element: Elem },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("construction invariant broken: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
