//! Orthogonality graphs `Ω_2k`, their twin quotients, and the machinery to
//! verify determining-set and distinguishing-labeling results on them.
//!
//! Vertices of `Ω_2k` are `2k`-bit strings packed into an unsigned machine
//! word; two vertices are adjacent when they differ in exactly `k` bits.
//! Bit position 1 is the least significant bit, so the written string
//! `0001` is the vertex with support `{1}`.
//!
//! The bitstring and graph layers are generic over the word type (any
//! [`Word`]); the aliases below fix the common `u64` instantiation, which
//! admits every `k ≤ 31`. Exact counting in [`combinat`] is generic over
//! the integer type and uses [`BigCount`] by default.

pub mod automorph;
pub mod bits;
pub mod combinat;
pub mod error;
pub mod graph;
pub mod omega;
pub mod quotient;
pub mod report;
pub mod symmetry;
pub mod word;

pub use error::{Error, Result};
pub use word::Word;

/// A vertex of `Ω_2k` in a 64-bit word.
pub type Bits = bits::Bitstring<u64>;
/// `Ω_2k` over 64-bit words.
pub type Omega = omega::OrthGraph<u64>;
/// The twin quotient `Ω̃_2k` over 64-bit words.
pub type OmegaQuotient = quotient::QuotientGraph<u64>;
/// A twin class `{u, u + 1}` over 64-bit words.
pub type Class = quotient::TwinClass<u64>;
/// Arbitrary-precision count used by the binomial formulas.
pub type BigCount = num_bigint::BigUint;

/// Largest `k` whose graph is materialized into explicit adjacency by default.
pub const MAX_MATERIALIZE_K: u32 = 4;
/// Largest `k` for which an explicit vertex map of `Ω_2k` is built (2^20 entries).
pub const MAX_EXPLICIT_MAP_K: u32 = 10;
