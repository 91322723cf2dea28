use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num};

/// An exact unsigned integer type usable for binomial counts.
pub trait Count: Clone + Ord + Num + FromPrimitive + Debug + Display {}

impl<T: Clone + Ord + Num + FromPrimitive + Debug + Display> Count for T {}

/// `C(n, r)`, exact; `0` when `r > n`.
///
/// Each partial product `C(n, i+1) = C(n, i) (n-i) / (i+1)` is an integer,
/// so the division is exact at every step. Fixed-width `C` panics on
/// overflow in debug builds; use [`crate::BigCount`] for large arguments.
pub fn binom<C: Count>(n: u64, r: u64) -> C {
    if r > n {
        return C::zero();
    }
    let r = r.min(n - r);
    let mut acc = C::one();
    for i in 0..r {
        acc = acc * C::from_u64(n - i).unwrap() / C::from_u64(i + 1).unwrap();
    }
    acc
}
