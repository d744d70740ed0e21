//! Fixed-length words over `{0, .., k-1}` and the rotation/reversal
//! primitives everything else is built on.
//!
//! All classification routines run in linear time. The slice-level functions
//! (`least_rotation`, `is_necklace_slice`, `classify_slice`) do not allocate,
//! which matters because the successor rule calls them several times per
//! emitted symbol.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::symbol::Symbol;

/// Where a word sits with respect to necklaces and bracelets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BraceletClass {
    /// Not the least rotation of its class.
    NotNecklace,
    /// A necklace whose reversal lies in its own rotation class.
    SymmetricNecklace,
    /// A necklace strictly smaller than the necklace of its reversal.
    AsymmetricBracelet,
    /// A necklace strictly larger than the necklace of its reversal.
    AsymmetricNonBraceletNecklace,
}

impl BraceletClass {
    pub fn is_necklace(self) -> bool {
        self != BraceletClass::NotNecklace
    }

    /// Symmetric necklaces and asymmetric bracelets are the bracelets.
    pub fn is_bracelet(self) -> bool {
        matches!(
            self,
            BraceletClass::SymmetricNecklace | BraceletClass::AsymmetricBracelet
        )
    }
}

impl fmt::Display for BraceletClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A non-empty word over the alphabet `{0, .., k-1}`.
///
/// Ordering is lexicographic on the symbols with the prefix rule (a proper
/// prefix is smaller); words over different alphabets compare by `k` only as a
/// tie-break, use [`Word::compare`] when the alphabets must agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<S> {
    symbols: Vec<S>,
    k: u32,
}

pub(crate) fn check_alphabet<S: Symbol>(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::AlphabetTooSmall(k));
    }
    if k > S::MAX_ALPHABET {
        return Err(Error::AlphabetTooLarge {
            k,
            max: S::MAX_ALPHABET,
        });
    }
    Ok(())
}

impl<S: Symbol> Word<S> {
    pub fn new(symbols: Vec<S>, k: u32) -> Result<Self> {
        check_alphabet::<S>(k)?;
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some((position, s)) = symbols.iter().enumerate().find(|(_, s)| s.value() >= k) {
            return Err(Error::SymbolOutOfRange {
                symbol: s.value(),
                position,
                k,
            });
        }
        Ok(Word { symbols, k })
    }

    pub fn from_values(values: &[u32], k: u32) -> Result<Self> {
        check_alphabet::<S>(k)?;
        if let Some((position, &symbol)) = values.iter().enumerate().find(|(_, &v)| v >= k) {
            return Err(Error::SymbolOutOfRange {
                symbol,
                position,
                k,
            });
        }
        Self::new(values.iter().map(|&v| S::lift(v)).collect(), k)
    }

    /// Parses whitespace/comma separated decimal symbols (`"0 10 11"`) or, for
    /// `k <= 10`, a contiguous digit string (`"0012"`).
    pub fn parse(text: &str, k: u32) -> Result<Self> {
        Self::from_values(&parse_symbols(text, k)?, k)
    }

    /// Builds a word without validation. Callers guarantee the invariants.
    pub(crate) fn from_raw(symbols: Vec<S>, k: u32) -> Self {
        debug_assert!(!symbols.is_empty());
        debug_assert!(symbols.iter().all(|s| s.value() < k));
        Word { symbols, k }
    }

    /// `x^n` for a single symbol `x`.
    pub fn constant(symbol: u32, n: usize, k: u32) -> Result<Self> {
        Self::from_values(&vec![symbol; n], k)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn symbols(&self) -> &[S] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<S> {
        self.symbols
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.symbols.iter().map(|s| s.value())
    }

    pub fn compare(&self, other: &Self) -> Result<Ordering> {
        if self.k != other.k {
            return Err(Error::AlphabetMismatch(self.k, other.k));
        }
        Ok(self.symbols.cmp(&other.symbols))
    }

    pub fn reverse(&self) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.reverse();
        Word::from_raw(symbols, self.k)
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.symbols)
    }

    /// The rotation starting at `start` (0-based).
    pub fn rotate(&self, start: usize) -> Self {
        let n = self.len();
        let start = start % n;
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(&self.symbols[start..]);
        symbols.extend_from_slice(&self.symbols[..start]);
        Word::from_raw(symbols, self.k)
    }

    /// Shortest `γ` with `self = γ^t`.
    pub fn aperiodic_prefix(&self) -> Self {
        let p = smallest_period(&self.symbols);
        Word::from_raw(self.symbols[..p].to_vec(), self.k)
    }

    pub fn is_periodic(&self) -> bool {
        smallest_period(&self.symbols) < self.len()
    }

    /// The lexicographically least rotation.
    pub fn canonical_necklace(&self) -> Self {
        self.rotate(least_rotation(&self.symbols))
    }

    pub fn is_necklace(&self) -> bool {
        is_necklace_slice(&self.symbols)
    }

    pub fn classify(&self) -> BraceletClass {
        classify_slice(&self.symbols)
    }

    pub fn is_asymmetric_bracelet(&self) -> bool {
        self.classify() == BraceletClass::AsymmetricBracelet
    }

    /// Renders as a digit string for `k <= 10`, space separated otherwise.
    pub fn render(&self) -> String {
        render_symbols(&self.symbols, self.k)
    }
}

impl<S: Symbol> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<S: Symbol> fmt::Debug for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({}; k={})", self.render(), self.k)
    }
}

impl<S: Symbol> Serialize for Word<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        serializer.serialize_str(&self.render())
    }
}

pub fn render_symbols<S: Symbol>(symbols: &[S], k: u32) -> String {
    if k <= 10 {
        symbols
            .iter()
            .map(|s| char::from_digit(s.value(), 10).expect("digit below 10"))
            .collect()
    } else {
        let parts: Vec<String> = symbols.iter().map(|s| s.value().to_string()).collect();
        parts.join(" ")
    }
}

/// Parses a whitespace/comma separated list of symbols. A single token is
/// read digit by digit when `k <= 10`, matching [`render_symbols`].
pub fn parse_symbols(text: &str, k: u32) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    let separated = k > 10 || text.contains(|c: char| c.is_whitespace() || c == ',');
    if separated {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(t.to_string())))
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(text.to_string())))
            .collect()
    }
}

pub fn is_palindrome<S: PartialEq>(s: &[S]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// Length of the aperiodic prefix, via the prefix function.
pub fn smallest_period<S: PartialEq>(s: &[S]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let mut fail = vec![0usize; n];
    for i in 1..n {
        let mut j = fail[i - 1];
        while j > 0 && s[i] != s[j] {
            j = fail[j - 1];
        }
        if s[i] == s[j] {
            j += 1;
        }
        fail[i] = j;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Start index of the least rotation of the cyclic string `at(0..n)`.
///
/// Two-candidate elimination: each mismatch discards a whole block of start
/// positions, so at most `2n` comparisons are made.
fn least_rotation_by<S: Ord + Copy>(n: usize, at: impl Fn(usize) -> S) -> usize {
    let (mut i, mut j, mut l) = (0usize, 1usize, 0usize);
    while i < n && j < n && l < n {
        let a = at((i + l) % n);
        let b = at((j + l) % n);
        match a.cmp(&b) {
            Ordering::Equal => {
                l += 1;
                continue;
            }
            Ordering::Greater => i += l + 1,
            Ordering::Less => j += l + 1,
        }
        if i == j {
            j += 1;
        }
        l = 0;
    }
    i.min(j)
}

/// Start index (0-based) of the lexicographically least rotation of `s`.
pub fn least_rotation<S: Ord + Copy>(s: &[S]) -> usize {
    least_rotation_by(s.len(), |t| s[t])
}

/// Single left-to-right pass: `s` is a necklace iff it is a prenecklace whose
/// length is a multiple of its longest Lyndon prefix.
pub fn is_necklace_slice<S: Ord>(s: &[S]) -> bool {
    let n = s.len();
    let mut p = 1;
    for i in 1..n {
        match s[i - p].cmp(&s[i]) {
            Ordering::Greater => return false,
            Ordering::Less => p = i + 1,
            Ordering::Equal => {}
        }
    }
    n.is_multiple_of(p)
}

/// Classifies `s` without allocating: necklace test, least rotation of the
/// reversal, then one comparison.
pub fn classify_slice<S: Ord + Copy>(s: &[S]) -> BraceletClass {
    if !is_necklace_slice(s) {
        return BraceletClass::NotNecklace;
    }
    let n = s.len();
    let rev = |t: usize| s[n - 1 - t];
    let r = least_rotation_by(n, rev);
    for (t, &x) in s.iter().enumerate() {
        let y = rev((r + t) % n);
        match x.cmp(&y) {
            Ordering::Less => return BraceletClass::AsymmetricBracelet,
            Ordering::Greater => return BraceletClass::AsymmetricNonBraceletNecklace,
            Ordering::Equal => {}
        }
    }
    BraceletClass::SymmetricNecklace
}

pub fn is_asymmetric_bracelet_slice<S: Ord + Copy>(s: &[S]) -> bool {
    classify_slice(s) == BraceletClass::AsymmetricBracelet
}
