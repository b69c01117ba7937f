use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("slope 0/0 is undefined")]
    ZeroZero,
    #[error("the meridian slope 1/0 has no continued fraction expansion")]
    InfinityInput,
    #[error("a rational tangle cannot have slope 1/0")]
    InfiniteTangle,
    #[error("a Montesinos tangle needs at least one entry")]
    EmptyTangle,
    #[error("wrap parameter must be 0 or 1, got {0}")]
    BadWrap(u8),
    #[error("closure of {0} has {1} components, not a knot")]
    NotAKnot(String, usize),
    #[error("two-bridge fraction needs a single rational tangle, got {0} entries")]
    NotLengthOne(usize),
    #[error("no pretzel spanning surface for {0}")]
    NoPretzelSurface(String),
    #[error("({0}, {1}) is not a nontrivial torus knot")]
    NotATorusKnot(String, String),
    #[error("cross-check disagreement: {0}")]
    InconsistentCrossCheck(String),
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
