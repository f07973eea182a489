use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("traceback needs a table built with every row retained")]
    RowsNotRetained,
    #[error("diagonal {d} is outside 0..{count}")]
    DiagonalOutOfRange { d: usize, count: usize },
    #[error("sequence of length {len} exceeds the oracle cap of {cap}")]
    OracleTooLong { len: usize, cap: usize },
    #[error("sequence of length {0} is too long (limit 2^31 - 1)")]
    SequenceTooLong(usize),
}
