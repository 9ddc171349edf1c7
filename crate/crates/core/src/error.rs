//! Error type shared across the crate. Domain errors carry enough context to
//! be reported by the CLI without a backtrace.

use rug::Rational;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Parameter outside the family's domain (a <= 3, bad quotient, ...).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Input could not be parsed (continued fractions, rationals, theta specs).
    #[error("parse error: {0}")]
    Parse(String),

    /// An interval argument was empty or reversed.
    #[error("empty interval: {0}")]
    EmptyInterval(String),

    /// Requested index lies outside a convergent table.
    #[error("index outside convergent table: {0}")]
    OutsideTable(String),

    /// The working precision could not certify another digit.
    #[error("precision exhausted after {emitted} certified digits")]
    PrecisionExhausted { emitted: usize },

    /// An iteration budget ran out before the requested depth.
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    /// Digit extraction hit a rational rotation number.
    #[error("rotation number locked at {rational} (digits so far: {digits:?})")]
    LockDetected { rational: Rational, digits: Vec<u64> },

    /// First-return combinatorics disagreed with themselves; the working
    /// precision is too low for the requested depth.
    #[error("first-return combinatorics inconsistent at digit {at_digit}; raise precision")]
    Inconsistent { at_digit: usize },

    /// A bisection could not separate its predicate within budget.
    #[error("solver stalled: {0}")]
    SolverStall(String),

    /// Window-bound search exhausted its cap without finding a violation.
    #[error("open-ended stage: no growth violation up to A = {a_cap} (q budget {q_budget}); {hint}")]
    OpenEndedStage { a_cap: u64, q_budget: u64, hint: String },

    /// State file could not be read back.
    #[error("state error: {0}")]
    State(String),
}
