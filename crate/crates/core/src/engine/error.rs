use thiserror::Error;

/// Errors raised by the simulation runtime.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("table function needs at least 2 points, got {0}")]
    TableTooShort(usize),

    #[error("table x values must be strictly increasing (violated at index {0})")]
    TableNotIncreasing(usize),

    #[error("table contains a non-finite coordinate at index {0}")]
    TableNotFinite(usize),

    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    #[error("duplicate stock name `{0}`")]
    DuplicateStock(String),

    #[error("stock vectors disagree: {0}")]
    StockMismatch(String),

    #[error("non-finite value for `{0}`")]
    NonFinite(String),

    #[error("non-finite value for `{name}` at step {step} (t = {t})")]
    NonFiniteAt {
        name: String,
        step: usize,
        t: String,
    },

    #[error("unknown recorded channel `{0}`")]
    UnknownChannel(String),

    #[error("delay must be positive, got {0}")]
    NonPositiveDelay(String),

    #[error("material delay inflow must be non-negative, got {0}")]
    NegativeInflow(String),
}
