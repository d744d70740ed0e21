use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{PrimInt, Unsigned};

/// An unsigned integer type used to store word symbols.
///
/// Every algorithm in the crate is written against this trait, so a caller can
/// pick a compact storage type (`u8`) for the common small alphabets or a wider
/// one when `k` exceeds 256. Symbol arithmetic never happens in `Self`; values
/// are lifted to `u32` first so that `k - 1 + 1` cannot overflow the storage.
pub trait Symbol: PrimInt + Unsigned + Hash + Debug + Display + Send + Sync + 'static {
    /// Largest alphabet size whose symbols `0..k` all fit in `Self`.
    const MAX_ALPHABET: u32;

    fn lift(value: u32) -> Self;

    fn value(self) -> u32;
}

macro_rules! impl_symbol {
    ($($t:ty => $max:expr),* $(,)?) => {
        $(
            impl Symbol for $t {
                const MAX_ALPHABET: u32 = $max;

                #[inline]
                fn lift(value: u32) -> Self {
                    debug_assert!(value < Self::MAX_ALPHABET || Self::MAX_ALPHABET == u32::MAX);
                    value as $t
                }

                #[inline]
                fn value(self) -> u32 {
                    self as u32
                }
            }
        )*
    };
}

impl_symbol!(u8 => 1 << 8, u16 => 1 << 16, u32 => u32::MAX);
