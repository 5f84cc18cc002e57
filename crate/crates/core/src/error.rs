use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interval [{start}, {end}] is outside the text range [{lo}, {hi}]")]
    OutOfRange {
        start: usize,
        end: usize,
        lo: usize,
        hi: usize,
    },
    #[error("invalid interval: start {start} > end {end}")]
    InvalidInterval { start: usize, end: usize },
    #[error("cannot build an index over an empty text")]
    EmptyText,
    #[error("the window is empty")]
    EmptyWindow,
    #[error("window capacity {capacity} exceeded")]
    CapacityExceeded { capacity: usize },
    #[error("query width {width} exceeds the maximum width {max}")]
    WidthExceeded { width: usize, max: usize },
    #[error("index {index} out of bounds for length {len}")]
    IndexOutOfBounds { index: usize, len: usize },
    #[error("element {0} is not a member of the set")]
    NotMember(usize),
    #[error("element {value} is outside the universe [1, {universe}]")]
    OutsideUniverse { value: usize, universe: usize },
    #[error("symbol {symbol} is outside the alphabet of size {sigma}")]
    UnknownSymbol { symbol: u32, sigma: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
