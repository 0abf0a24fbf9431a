use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(q)")]
    DivisionByZero,
    #[error("q = {0} is not an admissible specialization (q must avoid 0 and \u{b1}1)")]
    ForbiddenSpecialization(String),
    #[error("coefficient has a pole at q = {0}")]
    PoleAtPoint(String),
    #[error("odd weight {0} where an even weight is required")]
    OddWeight(i64),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("check `{name}` needs truncation order >= {min}, got {got}")]
    OrderTooSmall { name: String, min: u32, got: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
