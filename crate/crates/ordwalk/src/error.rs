use crate::ordinal::{Ordinal, ParseError};

fn show(t: &[Ordinal]) -> String {
    let parts: Vec<String> = t.iter().map(|o| o.to_string()).collect();
    format!("({})", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{} is not a C-index", show(.0))]
    NotIndex(Vec<Ordinal>),
    #[error("square-like coherence fails at {alpha} under index {}", show(.index))]
    CoherenceViolation { alpha: Ordinal, index: Vec<Ordinal> },
    #[error("club at {} has no member >= {xi}", show(.index))]
    NotCofinal { index: Vec<Ordinal>, xi: Ordinal },
    #[error("sequence of order {have} cannot carry order-{need} walks")]
    OrderTooLow { have: usize, need: usize },
    #[error("weight of {alpha} in the club of {beta} is infinite")]
    WeightInfinite { alpha: Ordinal, beta: Ordinal },
    #[error("walk tree exceeded {0} nodes")]
    TreeTooLarge(usize),
    #[error("descent claim fails at node {sigma:?}: {detail}")]
    ClaimViolation { sigma: String, detail: String },
    #[error("no opposite-signed partner for {}: {plus} plus, {minus} minus", show(.tuple))]
    Matching { tuple: Vec<Ordinal>, plus: usize, minus: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("bad C-sequence selector: {0}")]
    Selector(String),
    #[error("bad arguments: {0}")]
    BadArgs(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn fmt_tuple(t: &[Ordinal]) -> String {
    show(t)
}
