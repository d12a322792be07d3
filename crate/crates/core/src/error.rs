use thiserror::Error;

/// Errors raised by the jet, curve and metric layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("jet division by a series with zero constant term")]
    DivisionByZeroConstantTerm,

    #[error("jet square root of a series with non-positive constant term {0}")]
    NonPositiveConstantTerm(f64),

    #[error("jet order exhausted: cannot differentiate an order-0 jet")]
    OrderExhausted,

    #[error("curve is not immersed at t = {t} (zero speed)")]
    NotImmersed { t: f64 },

    #[error("jet order budget exceeded: requested order {requested} at depth {depth}, budget is {budget}")]
    OrderBudgetExceeded {
        requested: usize,
        depth: usize,
        budget: usize,
    },

    #[error("adaptive refinement exceeded the cap of {cap} samples")]
    RefinementLimitExceeded { cap: usize },

    #[error("non-finite jet coefficient at depth {depth}, t = {t}")]
    JetOverflow { depth: usize, t: f64 },

    #[error("curve is not the graph of a function (x'(t) vanishes or changes sign)")]
    NotAGraph,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures caused by numerical capacity (budget, refinement cap,
    /// overflow) rather than by bad input.
    pub fn is_numerical(&self) -> bool {
        !matches!(self, Error::InvalidArgument(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
