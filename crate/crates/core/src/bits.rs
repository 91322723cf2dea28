use std::fmt;
use std::ops::Add;

use crate::word::{check_k, Word};
use crate::{Error, Result};

/// A `2k`-bit string, a vertex of `Ω_2k`.
///
/// Positions run `1..=2k` with position 1 the least significant bit. The
/// written form is an ordinary binary numeral, so position 1 is the
/// rightmost character.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring<W: Word> {
    value: W,
    k: u32,
}

impl<W: Word> Bitstring<W> {
    pub fn new(k: u32, value: W) -> Result<Self> {
        check_k::<W>(k)?;
        if value > W::ones(k) {
            return Err(Error::ValueOutOfRange { value: value.to_u128().unwrap_or(u128::MAX), width: 2 * k });
        }
        Ok(Bitstring { value, k })
    }

    pub(crate) fn new_unchecked(k: u32, value: W) -> Self {
        debug_assert!(value <= W::ones(k));
        Bitstring { value, k }
    }

    pub fn zero(k: u32) -> Result<Self> {
        Self::new(k, W::zero())
    }

    pub fn ones(k: u32) -> Result<Self> {
        check_k::<W>(k)?;
        Ok(Bitstring { value: W::ones(k), k })
    }

    /// The string whose support is exactly `positions` (1-based).
    pub fn from_support(k: u32, positions: &[u32]) -> Result<Self> {
        check_k::<W>(k)?;
        let mut value = W::zero();
        for &p in positions {
            if p == 0 || p > 2 * k {
                return Err(Error::Malformed(format!("position {p} outside 1..={}", 2 * k)));
            }
            value = value | (W::one() << (p - 1) as usize);
        }
        Ok(Bitstring { value, k })
    }

    /// The weight-1 string `x_i` with a single 1 at position `i`.
    pub fn unit(k: u32, i: u32) -> Result<Self> {
        Self::from_support(k, &[i])
    }

    /// Parses a written numeral such as `"00101100"`; its length must be `2k`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || !s.len().is_multiple_of(2) {
            return Err(Error::Malformed(format!("bitstring {s:?} must have even, nonzero length")));
        }
        let k = (s.len() / 2) as u32;
        check_k::<W>(k)?;
        let mut value = W::zero();
        for c in s.chars() {
            let bit = match c {
                '0' => W::zero(),
                '1' => W::one(),
                _ => return Err(Error::Malformed(format!("bad character {c:?} in bitstring"))),
            };
            value = (value << 1) | bit;
        }
        Ok(Bitstring { value, k })
    }

    pub fn value(&self) -> W {
        self.value
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn width(&self) -> u32 {
        2 * self.k
    }

    pub fn weight(&self) -> u32 {
        self.value.count_ones()
    }

    pub fn bit(&self, position: u32) -> bool {
        debug_assert!((1..=self.width()).contains(&position));
        (self.value >> (position - 1) as usize) & W::one() == W::one()
    }

    /// Positions holding a 1, ascending.
    pub fn support(&self) -> Vec<u32> {
        (1..=self.width()).filter(|&p| self.bit(p)).collect()
    }

    /// Bitwise sum modulo 2.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k, "bitstrings of different widths");
        Bitstring { value: self.value ^ other.value, k: self.k }
    }

    /// `u + 1`, the unique twin of `u`.
    pub fn twin(&self) -> Self {
        Bitstring { value: self.value ^ W::ones(self.k), k: self.k }
    }

    pub fn is_even(&self) -> bool {
        self.weight().is_multiple_of(2)
    }
}

impl<W: Word> Add for Bitstring<W> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Bitstring::add(&self, &rhs)
    }
}

impl<W: Word> fmt::Display for Bitstring<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.width() as usize)
    }
}

impl<W: Word> fmt::Debug for Bitstring<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstring({self})")
    }
}

/// Zero-padded binary name of vertex `v` in `Ω_2k`.
pub fn binary_name(v: u64, k: u32) -> String {
    format!("{:0width$b}", v, width = 2 * k as usize)
}

/// Iterates all `width`-bit masks of the given weight in increasing order
/// (Gosper's hack). `width` must be smaller than the word width.
pub fn masks_of_weight<W: Word>(width: u32, weight: u32) -> impl Iterator<Item = W> {
    assert!(width < W::BITS);
    let limit = W::one() << width as usize;
    let mut next = if weight > width {
        None
    } else if weight == 0 {
        Some(W::zero())
    } else {
        Some((W::one() << weight as usize) - W::one())
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == W::zero() {
            None
        } else {
            let low = cur & !(cur - W::one());
            let r = cur + low;
            let n = (((r ^ cur) >> 2) / low) | r;
            (n < limit).then_some(n)
        };
        Some(cur)
    })
}
