use std::fmt::{Binary, Debug};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// An unsigned machine word wide enough to hold one vertex of `Ω_2k`.
///
/// A word of `BITS` bits supports every `k` with `2k < BITS`, so that the
/// vertex count `2^(2k)` is itself representable.
pub trait Word: PrimInt + Unsigned + Hash + Debug + Binary + Send + Sync + 'static {
    const BITS: u32;

    fn max_half_width() -> u32 {
        (Self::BITS - 1) / 2
    }

    /// The all-ones string of length `2k`.
    fn ones(k: u32) -> Self {
        (Self::one() << (2 * k) as usize) - Self::one()
    }

    fn as_u64(self) -> u64 {
        self.to_u64().expect("vertex fits in u64")
    }

    fn as_usize(self) -> usize {
        self.to_usize().expect("vertex fits in usize")
    }
}

macro_rules! impl_word {
    ($($t:ty),*) => {
        $(impl Word for $t {
            const BITS: u32 = <$t>::BITS;
        })*
    };
}

impl_word!(u8, u16, u32, u64, u128);

pub(crate) fn check_k<W: Word>(k: u32) -> crate::Result<()> {
    let max = W::max_half_width();
    if k == 0 || k > max {
        return Err(crate::Error::WidthOverflow { k, max });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_follow_word_width() {
        assert_eq!(u64::max_half_width(), 31);
        assert_eq!(u32::max_half_width(), 15);
        assert_eq!(u8::max_half_width(), 3);
        assert!(check_k::<u64>(31).is_ok());
        assert!(check_k::<u64>(32).is_err());
        assert!(check_k::<u64>(0).is_err());
    }

    #[test]
    fn ones_masks() {
        assert_eq!(u64::ones(2), 0b1111);
        assert_eq!(u8::ones(3), 0b11_1111);
        assert_eq!(u64::ones(31), (1u64 << 62) - 1);
    }
}
