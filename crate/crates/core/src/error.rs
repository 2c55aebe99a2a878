use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inexact division: divisor does not divide dividend")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("coefficient overflow")]
    Overflow,
    #[error("window of size {window} too small for a partition with {parts} nonzero parts")]
    WindowTooSmall { window: i64, parts: usize },
    #[error("operator index {j} is at or below the window floor {floor}")]
    WindowViolation { j: i64, floor: i64 },
    #[error("symbol is not standard")]
    NotStandard,
    #[error("no reduction step found for a standard symbol of positive degree")]
    NoReductionFound,
    #[error("|Z| = {len} and r = {r} have different parity, or |Z| < r")]
    ParityViolation { len: usize, r: u32 },
    #[error("involution is not r-admissible for the given Z")]
    InadmissibleInvolution,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("not implemented: {0}")]
    Unimplemented(&'static str),
}
