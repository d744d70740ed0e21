//! Exact counts, bounds, the orientability verifier and brute-force oracles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed};
use serde::{Serialize, Serializer};

use crate::cyclejoin::{apply_into, Necklaces, Rule};
use crate::error::{Error, Result};
use crate::symbol::Symbol;
use crate::word::{check_alphabet, classify_slice, is_palindrome, least_rotation, BraceletClass, Word};

/// Default cap on `k^n` for [`brute_force_s`].
pub const BRUTE_FORCE_S_LIMIT: u128 = 100_000_000;
/// Default cap on `k^n` for [`brute_force_max_os`].
pub const BRUTE_FORCE_MAX_OS_LIMIT: u128 = 27;

/// Integer types the counting functions can be evaluated in. Fixed-width
/// types report overflow as [`Error::Overflow`]; `BigUint` never overflows.
pub trait Count:
    Clone + Ord + Integer + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + fmt::Display + fmt::Debug
{
}

impl<T> Count for T where
    T: Clone + Ord + Integer + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive + fmt::Display + fmt::Debug
{
}

fn lift<T: Count>(v: u64) -> Option<T> {
    T::from_u64(v)
}

fn checked_pow<T: Count>(base: u32, exp: u32) -> Option<T> {
    let b: T = lift(base as u64)?;
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc.checked_mul(&b)?;
    }
    Some(acc)
}

fn big_pow(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Möbius function, `m >= 1`.
pub fn moebius(m: u64) -> i8 {
    assert!(m >= 1, "moebius is defined for m >= 1");
    let mut m = m;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `2·H_k(d)`, always an integer.
pub fn twice_h<T: Count>(k: u32, d: u64) -> Option<T> {
    let mut sum = T::zero();
    for i in divisors(d) {
        let e = u32::try_from(i).ok()?;
        let a: T = checked_pow(k, e.div_ceil(2))?;
        let b: T = checked_pow(k, e / 2 + 1)?;
        let term = a.checked_add(&b)?.checked_mul(&lift(i)?)?;
        sum = sum.checked_add(&term)?;
    }
    Some(sum)
}

/// `H_k(d)` as an exact rational (integer or half-integer).
pub fn h<T: Count>(k: u32, d: u64) -> Result<Ratio<T>> {
    if d == 0 || k < 2 {
        return Err(Error::Precondition {
            op: "H",
            requirement: "d >= 1 and k >= 2",
        });
    }
    let two = lift::<T>(2).expect("2 fits any count type");
    twice_h(k, d)
        .map(|t| Ratio::new(t, two))
        .ok_or(Error::Overflow {
            what: "H",
            n: d as usize,
            k,
        })
}

fn check_nk(op: &'static str, n: usize, k: u32) -> Result<()> {
    if n == 0 || k < 2 {
        return Err(Error::Precondition {
            op,
            requirement: "n >= 1 and k >= 2",
        });
    }
    Ok(())
}

/// `L_k(n) = |S_k(n)|`, the length of the generated sequence.
pub fn lower_bound_l<T: Count>(n: usize, k: u32) -> Result<T> {
    check_nk("lower_bound_L", n, k)?;
    let overflow = Error::Overflow {
        what: "lower_bound_L",
        n,
        k,
    };
    let compute = || -> Option<T> {
        let e = u32::try_from(n).ok()?;
        let two: T = lift(2)?;
        let mut pos = checked_pow::<T>(k, e)?.checked_mul(&two)?;
        let mut neg = T::zero();
        for d in divisors(n as u64) {
            let q = n as u64 / d;
            let mu = moebius(q);
            if mu == 0 {
                continue;
            }
            let term = twice_h::<T>(k, d)?.checked_mul(&lift(q)?)?;
            if mu > 0 {
                neg = neg.checked_add(&term)?;
            } else {
                pos = pos.checked_add(&term)?;
            }
        }
        let four: T = lift(4)?;
        let numerator = pos.checked_sub(&neg)?;
        let (l, rem) = numerator.div_rem(&four);
        assert!(rem.is_zero(), "L numerator must be divisible by 4");
        Some(l)
    };
    compute().ok_or(overflow)
}

/// `(k^n - k^floor((n+1)/2)) / 2`, the trivial upper bound on the maximum
/// length of an orientable sequence.
pub fn trivial_upper_bound_m<T: Count>(n: usize, k: u32) -> Result<T> {
    check_nk("trivial_upper_bound_M", n, k)?;
    let compute = || -> Option<T> {
        let e = u32::try_from(n).ok()?;
        let all: T = checked_pow(k, e)?;
        let pal: T = checked_pow(k, e.div_ceil(2))?;
        Some(all.checked_sub(&pal)? / lift(2)?)
    };
    compute().ok_or(Error::Overflow {
        what: "trivial_upper_bound_M",
        n,
        k,
    })
}

fn n3_term(n: usize, k: u32) -> BigInt {
    BigInt::from(n as u64).pow(3) * big_pow(k as u64, n as u32 / 2 + 1)
}

/// `(k^n - n^3 k^(floor(n/2)+1)) / 2`, a lower estimate of `L_k(n)` that may be
/// negative for small n.
pub fn asymptotic_lower_bound(n: usize, k: u32) -> BigRational {
    let v = big_pow(k as u64, n as u32) - n3_term(n, k);
    Ratio::new(v, BigInt::from(2))
}

/// Upper bound on the relative gap `(M - L) / L` implied by
/// [`asymptotic_lower_bound`]; `None` while that estimate is not positive.
pub fn optimality_gap_bound(n: usize, k: u32) -> Result<Option<BigRational>> {
    if n < 3 || k < 3 {
        return Err(Error::Precondition {
            op: "optimality_gap_bound",
            requirement: "n >= 3 and k >= 3",
        });
    }
    let t = n3_term(n, k);
    let den = big_pow(k as u64, n as u32) - &t;
    if !den.is_positive() {
        return Ok(None);
    }
    let num = t - big_pow(k as u64, (n as u32).div_ceil(2));
    Ok(Some(Ratio::new(num, den)))
}

fn ratio_as_string<S: Serializer>(r: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub k: u32,
    #[serde(rename = "L")]
    pub lower_bound_l: u128,
    #[serde(rename = "upperM")]
    pub trivial_upper_bound_m: u128,
    /// Serialized as `"p/q"` (or `null`).
    #[serde(rename = "gapBound", serialize_with = "ratio_as_string")]
    pub optimality_gap_bound: Option<BigRational>,
}

impl CountReport {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        let lower_bound_l = lower_bound_l(n, k)?;
        let trivial_upper_bound_m = trivial_upper_bound_m(n, k)?;
        let optimality_gap_bound = if n >= 3 && k >= 3 {
            optimality_gap_bound(n, k)?
        } else {
            None
        };
        Ok(CountReport {
            n,
            k,
            lower_bound_l,
            trivial_upper_bound_m,
            optimality_gap_bound,
        })
    }
}

/// First violation found by the verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrientVerdict<S: Symbol> {
    Ok,
    /// The window occurs twice in the same direction.
    DuplicateWindow(Word<S>),
    /// The window's reversal occurred earlier.
    ReversalClash(Word<S>),
    /// The window equals its own reversal.
    PalindromeWindow(Word<S>),
}

impl<S: Symbol> OrientVerdict<S> {
    pub fn is_ok(&self) -> bool {
        matches!(self, OrientVerdict::Ok)
    }
}

impl<S: Symbol> fmt::Display for OrientVerdict<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientVerdict::Ok => f.write_str("ok"),
            OrientVerdict::DuplicateWindow(w) => write!(f, "duplicate window {w}"),
            OrientVerdict::ReversalClash(w) => write!(f, "reversal clash {w}"),
            OrientVerdict::PalindromeWindow(w) => write!(f, "palindrome window {w}"),
        }
    }
}

fn scan<S: Symbol>(
    seq: &Word<S>,
    n: usize,
    windows: usize,
    cyclic: bool,
) -> OrientVerdict<S> {
    let s = seq.symbols();
    let len = s.len();
    // key: min(w, reverse w); value: whether w itself was the key
    let mut seen: HashMap<Vec<S>, bool> = HashMap::with_capacity(windows);
    let mut w = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for i in 0..windows {
        w.clear();
        if cyclic {
            w.extend((0..n).map(|t| s[(i + t) % len]));
        } else {
            w.extend_from_slice(&s[i..i + n]);
        }
        if is_palindrome(&w) {
            return OrientVerdict::PalindromeWindow(Word::from_raw(w, seq.k()));
        }
        r.clear();
        r.extend(w.iter().rev());
        let forward = w < r;
        let key = if forward { w.clone() } else { r.clone() };
        if let Some(&prev) = seen.get(&key) {
            let word = Word::from_raw(w, seq.k());
            return if prev == forward {
                OrientVerdict::DuplicateWindow(word)
            } else {
                OrientVerdict::ReversalClash(word)
            };
        }
        seen.insert(key, forward);
    }
    OrientVerdict::Ok
}

/// Checks every cyclic length-n window of `seq`.
pub fn verify_orientable<S: Symbol>(seq: &Word<S>, n: usize) -> Result<OrientVerdict<S>> {
    if n == 0 || seq.len() < n {
        return Err(Error::Precondition {
            op: "verify_orientable",
            requirement: "1 <= n <= |seq|",
        });
    }
    Ok(scan(seq, n, seq.len(), true))
}

/// Checks the `|seq| - n + 1` windows of `seq` read as a linear string.
pub fn verify_orientable_linear<S: Symbol>(seq: &Word<S>, n: usize) -> Result<OrientVerdict<S>> {
    if n == 0 || seq.len() < n {
        return Err(Error::Precondition {
            op: "verify_orientable_linear",
            requirement: "1 <= n <= |seq|",
        });
    }
    Ok(scan(seq, n, seq.len() - n + 1, false))
}

fn space_size(n: usize, k: u32, limit: u128) -> Result<u128> {
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| (k as u128).checked_pow(e))
        .unwrap_or(u128::MAX);
    if size > limit {
        return Err(Error::BruteForceLimit { size, limit });
    }
    Ok(size)
}

/// S_k(n) by exhaustive scan of all k^n strings.
pub fn brute_force_s<S: Symbol>(n: usize, k: u32) -> Result<BTreeSet<Word<S>>> {
    brute_force_s_with_limit(n, k, BRUTE_FORCE_S_LIMIT)
}

pub fn brute_force_s_with_limit<S: Symbol>(
    n: usize,
    k: u32,
    limit: u128,
) -> Result<BTreeSet<Word<S>>> {
    check_alphabet::<S>(k)?;
    check_nk("brute_force_S", n, k)?;
    space_size(n, k, limit)?;
    let mut out = BTreeSet::new();
    let mut w = vec![S::zero(); n];
    let mut neck = Vec::with_capacity(n);
    loop {
        neck.clear();
        neck.extend_from_slice(&w);
        let r = least_rotation(&neck);
        neck.rotate_left(r);
        if classify_slice(&neck) == BraceletClass::AsymmetricBracelet {
            out.insert(Word::from_raw(w.clone(), k));
        }
        // odometer, last position fastest
        let mut p = n;
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            if w[p].value() + 1 < k {
                w[p] = S::lift(w[p].value() + 1);
                break;
            }
            w[p] = S::zero();
        }
    }
}

/// Length of the longest cyclic orientable sequence of order n over k symbols,
/// by exhaustive search. Guarded by [`BRUTE_FORCE_MAX_OS_LIMIT`].
pub fn brute_force_max_os(n: usize, k: u32) -> Result<usize> {
    Ok(longest_orientable_cycle::<u32>(n, k, BRUTE_FORCE_MAX_OS_LIMIT)?.map_or(0, |w| w.len()))
}

struct MaxSearch {
    k: u64,
    vertices: u64,
    key: Vec<Option<u64>>,
    used: Vec<bool>,
    upper: usize,
    start: u64,
    path: Vec<u64>,
    best: Vec<u64>,
}

impl MaxSearch {
    fn dfs(&mut self, v: u64) {
        if self.best.len() == self.upper {
            return;
        }
        if v == self.start && !self.path.is_empty() && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.upper <= self.best.len() {
            return;
        }
        for c in 0..self.k {
            let edge = v * self.k + c;
            let Some(key) = self.key[edge as usize] else {
                continue;
            };
            if self.used[key as usize] {
                continue;
            }
            self.used[key as usize] = true;
            self.path.push(c);
            self.dfs(edge % self.vertices);
            self.path.pop();
            self.used[key as usize] = false;
        }
    }
}

/// A longest cyclic orientable sequence of order n (`None` if none exists),
/// found by depth-first search over closed trails of the order-(n-1) de Bruijn
/// graph that never reuse a window or its reversal. Edges are tried in
/// lexicographic order, so the witness is deterministic.
pub fn longest_orientable_cycle<S: Symbol>(
    n: usize,
    k: u32,
    limit: u128,
) -> Result<Option<Word<S>>> {
    check_alphabet::<S>(k)?;
    check_nk("brute_force_max_os", n, k)?;
    let size = space_size(n, k, limit)? as u64;
    let kk = k as u64;
    let vertices = size / kk;
    let decode = |mut code: u64| {
        let mut digits = vec![0u64; n];
        for d in digits.iter_mut().rev() {
            *d = code % kk;
            code /= kk;
        }
        digits
    };
    let encode = |digits: &[u64]| digits.iter().fold(0u64, |acc, &d| acc * kk + d);
    let key: Vec<Option<u64>> = (0..size)
        .map(|code| {
            let w = decode(code);
            let rev: Vec<u64> = w.iter().rev().copied().collect();
            let rc = encode(&rev);
            (rc != code).then(|| code.min(rc))
        })
        .collect();
    let upper = key.iter().flatten().count() / 2;
    let mut search = MaxSearch {
        k: kk,
        vertices,
        key,
        used: vec![false; size as usize],
        upper,
        start: 0,
        path: Vec::new(),
        best: Vec::new(),
    };
    for start in 0..vertices {
        search.start = start;
        search.dfs(start);
    }
    if search.best.is_empty() {
        return Ok(None);
    }
    // the trail starts at vertex `start`; its symbols are the appended ones
    let symbols = search.best.iter().map(|&c| S::lift(c as u32)).collect();
    Ok(Some(Word::from_raw(symbols, k)))
}

/// Members of A_k(n) that none of firstSymbol, lastSymbol, firstNonMin or
/// lastNonMax map back into A_k(n).
pub fn stubborn_strings<S: Symbol>(n: usize, k: u32) -> Result<Vec<Word<S>>> {
    const RULES: [Rule; 4] = [
        Rule::LastNonMax,
        Rule::LastSymbol,
        Rule::FirstNonMin,
        Rule::FirstSymbol,
    ];
    let mut necklaces = Necklaces::<S>::new(n, k)?;
    let mut buf = Vec::with_capacity(n);
    let mut out = Vec::new();
    while let Some(a) = necklaces.advance() {
        if classify_slice(a) != BraceletClass::AsymmetricBracelet {
            continue;
        }
        let escapes = RULES.iter().all(|&rule| {
            apply_into(rule, a, k, &mut buf).is_none()
                || classify_slice(&buf) != BraceletClass::AsymmetricBracelet
        });
        if escapes {
            out.push(Word::from_raw(a.to_vec(), k));
        }
    }
    Ok(out)
}
