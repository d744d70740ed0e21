//! Orientable sequences over alphabets of size k >= 3.
//!
//! A cyclic sequence is orientable of order n when every length-n window
//! occurs at most once in either reading direction. This crate generates one
//! such sequence for every n >= 3, k >= 3 with an O(n)-per-symbol successor
//! rule derived from a cycle-joining tree of asymmetric bracelets, plus the
//! maximal construction for n = 2.
//!
//! ```
//! use orientseq::{generate_cyclic, verify_orientable, Word8};
//!
//! let s: Word8 = generate_cyclic(5, 3).unwrap();
//! assert_eq!(s.len(), 60);
//! assert!(verify_orientable(&s, 5).unwrap().is_ok());
//! ```
//!
//! All algorithms are generic over the [`Symbol`] storage type; the aliases
//! below fix it to `u8` (k <= 256) or `u16` (k <= 65536).

pub mod analysis;
pub mod cyclejoin;
pub mod error;
pub mod osgen;
pub mod symbol;
pub mod word;

pub use analysis::{
    brute_force_max_os, brute_force_s, h, lower_bound_l, moebius, optimality_gap_bound,
    stubborn_strings, trivial_upper_bound_m, verify_orientable, verify_orientable_linear, Count,
    CountReport, OrientVerdict,
};
pub use cyclejoin::{
    build_tree, enumerate_asymmetric_bracelets, parent, parent_verdict, root, ConjugatePair,
    CycleJoinTree, ParentVerdict, Rule,
};
pub use error::{Error, Result};
pub use osgen::{
    generate_cyclic, generate_os2, successor, to_acyclic, Os2Stream, SequenceStream, Successor,
};
pub use symbol::Symbol;
pub use word::{BraceletClass, Word};

pub type Word8 = Word<u8>;
pub type Word16 = Word<u16>;
pub type Tree8 = CycleJoinTree<u8>;
pub type Tree16 = CycleJoinTree<u16>;
pub type Stream8 = SequenceStream<u8>;
pub type Stream16 = SequenceStream<u16>;
pub type Verdict8 = OrientVerdict<u8>;
/// Arbitrary-precision count type for [`lower_bound_l`] beyond `u128`.
pub type BigCount = num_bigint::BigUint;
