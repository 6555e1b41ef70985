use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has a zero constant term and no reciprocal")]
    ZeroConstantTerm,

    #[error("inner series of a composition must have a zero constant term")]
    NonzeroConstantTerm,

    #[error("odd part of the auxiliary expansion is nonzero (first at t^{index})")]
    OddPartNonzero { index: usize },

    #[error("index {requested} exceeds truncation order {order}")]
    OrderExceeded { requested: usize, order: usize },

    #[error("series of order 0 has no derivative information")]
    OrderExhausted,

    #[error("coefficient of x^{power} is nonzero; cannot divide by x^{shift}")]
    NotDivisible { power: usize, shift: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("divergent series: {0}")]
    DivergentSeries(String),

    #[error("requested order {requested} exceeds the configured cap {cap}")]
    OrderCap { requested: usize, cap: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
