use thiserror::Error;

pub type Result<T, E = MonoError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: String, y: String, z: String },

    #[error("invalid identity: {0}")]
    Identity(String),

    #[error("{what} cap of {cap} exceeded ({reached} reached so far)")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        reached: usize,
    },

    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),

    #[error("letter {0:?} is mapped twice")]
    DuplicateLetter(char),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("the two factorizations are of different words")]
    ConcatMismatch,

    #[error("need m <= n, got m = {m}, n = {n}")]
    TooManyParts { m: usize, n: usize },

    #[error("at least one part is required")]
    NoParts,

    #[error("term syntax error at {pos}: {msg}")]
    TermSyntax { pos: usize, msg: String },

    #[error("profiles of u_1..u_m and w_1..w_n differ at arity {n}")]
    ProfileMismatch { n: usize },

    #[error("expansions are not comparable: {0}")]
    ExpansionMismatch(String),

    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),

    #[error("invalid automaton: {0}")]
    InvalidDfa(String),

    #[error("{0}")]
    Config(String),
}
