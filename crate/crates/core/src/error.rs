use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k = {k} is outside 1..={max} for this word width")]
    WidthOverflow { k: u32, max: u32 },

    #[error("value {value:#x} does not fit in {width} bits")]
    ValueOutOfRange { value: u128, width: u32 },

    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("{what} exceeds the size cap of {cap}")]
    SizeCap { what: String, cap: u128 },

    #[error("not a bijection: {0}")]
    NotBijective(String),

    #[error("({0}, {1}) is not an arc of the graph")]
    NotArc(u64, u64),

    #[error("map does not preserve twin pairs at vertex {0}")]
    NotTwinPreserving(u64),

    #[error("map is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("vertex set is not determining")]
    NotDetermining,

    #[error("twin pair of vertex {0} is monochromatic")]
    MonochromaticTwinPair(u64),

    #[error("malformed request: {0}")]
    Malformed(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
