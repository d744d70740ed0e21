//! Sequence production.
//!
//! [`Successor`] evaluates the O(n)-per-symbol successor rule for the
//! cycle-joining tree of asymmetric bracelets: it decides, from the current
//! window alone, whether the window lies on a conjugate pair of the tree and
//! which chain neighbour comes next. [`SequenceStream`] iterates it from a seed.
//! [`Os2Stream`] emits the maximal order-2 construction in O(1) per symbol.

use crate::cyclejoin::{dec, inc, root, Rule, Scratch};
use crate::error::{Error, Result};
use crate::symbol::Symbol;
use crate::word::{check_alphabet, classify_slice, BraceletClass, Word};

/// Positions read off a window `a` (all 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowIndices {
    /// Largest index with a non-zero symbol.
    pub i: Option<usize>,
    /// Smallest index after the first with a symbol below `k-1`.
    pub j: Option<usize>,
    /// Second smallest index after the first with a symbol below `k-1`.
    pub ell: Option<usize>,
}

impl WindowIndices {
    pub fn of<S: Symbol>(a: &[S], k: u32) -> Self {
        let max = k - 1;
        let mut below = a
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, s)| s.value() != max)
            .map(|(p, _)| p);
        let j = below.next();
        let ell = below.next();
        WindowIndices {
            i: a.iter().rposition(|s| s.value() != 0),
            j,
            ell,
        }
    }
}

/// The rotations of a window (β) and of its one-symbol conjugate (γ) that the
/// successor rule tests for tree membership, plus σ.
///
/// Slot `r` of `beta`/`gamma` corresponds to the parent rules lastNonMax,
/// lastSymbol, firstNonMin and secondLastNonMax in that order. A slot is
/// `None` when the index it depends on does not exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateStrings<S> {
    pub beta: [Option<Vec<S>>; 4],
    pub gamma: [Option<Vec<S>>; 4],
    pub sigma: Option<Vec<S>>,
}

/// `a[from..] · x · a[1..from]`, the rotation bringing `a[0]` just after the
/// tail `a[from..]`, with `a[0]` replaced by `x`.
fn rotate_with_first<S: Symbol>(a: &[S], from: usize, x: S, out: &mut Vec<S>) {
    out.clear();
    out.extend_from_slice(&a[from..]);
    out.push(x);
    out.extend_from_slice(&a[1..from]);
}

/// `0^(n-1-i) · x · a[1..=i]`.
fn zeros_then_first<S: Symbol>(a: &[S], i: usize, x: S, out: &mut Vec<S>) {
    out.clear();
    out.extend(std::iter::repeat_n(S::zero(), a.len() - 1 - i));
    out.push(x);
    out.extend_from_slice(&a[1..=i]);
}

impl<S: Symbol> CandidateStrings<S> {
    pub fn new(a: &[S], k: u32) -> Self {
        let idx = WindowIndices::of(a, k);
        let a1 = a[0];
        let build = |f: &dyn Fn(S, &mut Vec<S>), x: S| {
            let mut v = Vec::with_capacity(a.len());
            f(x, &mut v);
            v
        };
        let by_j = idx.j.map(|j| move |x: S, out: &mut Vec<S>| rotate_with_first(a, j, x, out));
        let by_ell = idx
            .ell
            .map(|l| move |x: S, out: &mut Vec<S>| rotate_with_first(a, l, x, out));
        let by_i = idx
            .i
            .map(|i| move |x: S, out: &mut Vec<S>| zeros_then_first(a, i, x, out));
        let last = |x: S, out: &mut Vec<S>| rotate_with_first(a, 1, x, out);

        let beta = [
            by_j.as_ref().map(|f| build(f, a1)),
            Some(build(&last, a1)),
            by_i.as_ref().map(|f| build(f, a1)),
            by_ell.as_ref().map(|f| build(f, a1)),
        ];
        let gamma = [
            by_j.as_ref().map(|f| build(f, dec(a1, k))),
            Some(build(&last, dec(a1, k))),
            by_i.as_ref().map(|f| build(f, inc(a1, k))),
            by_ell.as_ref().map(|f| build(f, dec(a1, k))),
        ];
        let sigma = by_j.as_ref().map(|f| build(f, S::lift(k - 2)));
        CandidateStrings { beta, gamma, sigma }
    }
}

fn check_generation_range(n: usize, k: u32) -> Result<()> {
    if k == 2 {
        return Err(Error::Unsupported {
            n,
            k,
            reason: "binary orientable sequences are covered by prior work, not this rule",
        });
    }
    if k < 3 {
        return Err(Error::AlphabetTooSmall(k));
    }
    if n < 3 {
        return Err(Error::Unsupported {
            n,
            k,
            reason: "the successor rule needs n >= 3 (use the order-2 construction)",
        });
    }
    Ok(())
}

/// Reusable evaluator of the successor rule for fixed `(n, k)`.
///
/// Holds O(n) scratch buffers so repeated calls do not allocate.
#[derive(Debug, Clone)]
pub struct Successor<S> {
    n: usize,
    k: u32,
    scratch: Scratch<S>,
    buf: Vec<S>,
}

impl<S: Symbol> Successor<S> {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        check_alphabet::<S>(k)?;
        check_generation_range(n, k)?;
        Ok(Successor {
            n,
            k,
            scratch: Scratch::new(),
            buf: Vec::with_capacity(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// True iff the candidate currently in `buf` is in A_k(n) with its parent
    /// given by `rule`.
    #[inline]
    fn buf_has(&mut self, rule: Rule) -> bool {
        self.scratch.has_parent_rule(&self.buf, self.k, rule)
    }

    /// Next symbol after window `a`. The window must lie in S_k(n); this is
    /// not re-checked here (see [`successor`]).
    pub fn next_symbol(&mut self, a: &[S]) -> S {
        debug_assert_eq!(a.len(), self.n);
        let k = self.k;
        let max = k - 1;
        let a1 = a[0];
        let v1 = a1.value();
        let idx = WindowIndices::of(a, k);

        // A candidate joined through a mod-k wrap of a_1 (0-1 or (k-1)+1) is not
        // the edge that made it; the tree-walk oracle rejects those branches.
        let (dec_ok, inc_ok) = (v1 > 0, v1 < max);

        // α on the parent side of an edge: Next is the child's symbol.
        if let Some(j) = idx.j {
            rotate_with_first(a, j, dec(a1, k), &mut self.buf);
            if dec_ok && self.buf_has(Rule::LastNonMax) {
                return dec(a1, k);
            }
        }
        rotate_with_first(a, 1, dec(a1, k), &mut self.buf);
        if self.buf_has(Rule::LastSymbol) {
            return dec(a1, k);
        }
        if let Some(i) = idx.i {
            zeros_then_first(a, i, inc(a1, k), &mut self.buf);
            if inc_ok && self.buf_has(Rule::FirstNonMin) {
                return inc(a1, k);
            }
        }
        if let Some(l) = idx.ell {
            rotate_with_first(a, l, dec(a1, k), &mut self.buf);
            if dec_ok && self.buf_has(Rule::SecondLastNonMax) {
                return dec(a1, k);
            }
        }

        // α on the child side only: Next wraps to the top of its chain.
        if let Some(j) = idx.j {
            rotate_with_first(a, j, a1, &mut self.buf);
            if inc_ok && self.buf_has(Rule::LastNonMax) {
                rotate_with_first(a, j, S::lift(k - 2), &mut self.buf);
                return if self.buf_has(Rule::LastNonMax) {
                    S::lift(k - 1)
                } else {
                    S::lift(k - 2)
                };
            }
        }
        rotate_with_first(a, 1, a1, &mut self.buf);
        if self.buf_has(Rule::LastSymbol) {
            return S::zero();
        }
        if let Some(i) = idx.i {
            zeros_then_first(a, i, a1, &mut self.buf);
            if dec_ok && self.buf_has(Rule::FirstNonMin) {
                return dec(a1, k);
            }
        }
        if let Some(l) = idx.ell {
            rotate_with_first(a, l, a1, &mut self.buf);
            if inc_ok && self.buf_has(Rule::SecondLastNonMax) {
                return inc(a1, k);
            }
        }
        a1
    }
}

fn on_cycle<S: Symbol>(a: &[S]) -> bool {
    let mut neck = a.to_vec();
    let r = crate::word::least_rotation(&neck);
    neck.rotate_left(r);
    classify_slice(&neck) == BraceletClass::AsymmetricBracelet
}

/// The symbol following window `a` in the generated sequence.
pub fn successor<S: Symbol>(a: &Word<S>) -> Result<S> {
    let mut rule = Successor::new(a.len(), a.k())?;
    if !on_cycle(a.symbols()) {
        return Err(Error::OffCycle(a.render()));
    }
    Ok(rule.next_symbol(a.symbols()))
}

/// Iterates the successor rule from a seed window, yielding one symbol per
/// step until the window returns to the seed.
#[derive(Debug, Clone)]
pub struct SequenceStream<S> {
    rule: Successor<S>,
    window: Vec<S>,
    seed: Vec<S>,
    emitted: u64,
    done: bool,
}

impl<S: Symbol> SequenceStream<S> {
    /// Starts at the tree root `0^(n-2)(k-2)(k-1)`.
    pub fn new(n: usize, k: u32) -> Result<Self> {
        let rule = Successor::new(n, k)?;
        Self::with_rule(rule, root::<S>(n, k)?.into_symbols())
    }

    pub fn from_seed(seed: &Word<S>) -> Result<Self> {
        let rule = Successor::new(seed.len(), seed.k())?;
        if !on_cycle(seed.symbols()) {
            return Err(Error::OffCycle(seed.render()));
        }
        Self::with_rule(rule, seed.symbols().to_vec())
    }

    fn with_rule(rule: Successor<S>, seed: Vec<S>) -> Result<Self> {
        Ok(SequenceStream {
            rule,
            window: seed.clone(),
            seed,
            emitted: 0,
            done: false,
        })
    }

    pub fn window(&self) -> &[S] {
        &self.window
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }
}

impl<S: Symbol> Iterator for SequenceStream<S> {
    type Item = S;

    fn next(&mut self) -> Option<S> {
        if self.done {
            return None;
        }
        let out = self.window[0];
        let next = self.rule.next_symbol(&self.window);
        self.window.rotate_left(1);
        *self.window.last_mut().expect("n >= 3") = next;
        self.emitted += 1;
        if self.window == self.seed {
            self.done = true;
        }
        Some(out)
    }
}

/// The full cyclic orientable sequence of order n over k symbols. Order 2 is
/// routed to [`generate_os2`].
pub fn generate_cyclic<S: Symbol>(n: usize, k: u32) -> Result<Word<S>> {
    if n == 2 && k >= 3 {
        return generate_os2(k);
    }
    let symbols: Vec<S> = SequenceStream::new(n, k)?.collect();
    Ok(Word::from_raw(symbols, k))
}

/// Constant-time-per-symbol emitter of the maximal order-2 sequence.
///
/// For odd k the output is the concatenation of blocks for m = 3, 5, .., k;
/// for even k of blocks for m = 4, 6, .., k. Block m interleaves
/// `0, 1, .., m-3` (odd positions) with alternating `m-2, m-1` (even
/// positions); odd blocks end with one extra `m-1`.
#[derive(Debug, Clone)]
pub struct Os2Stream<S> {
    k: u32,
    m: u32,
    t: u32,
    _symbol: std::marker::PhantomData<S>,
}

impl<S: Symbol> Os2Stream<S> {
    pub fn new(k: u32) -> Result<Self> {
        check_alphabet::<S>(k)?;
        if k < 3 {
            return Err(Error::Unsupported {
                n: 2,
                k,
                reason: "no orientable sequence of order 2 exists for k < 3",
            });
        }
        Ok(Os2Stream {
            k,
            m: if k % 2 == 1 { 3 } else { 4 },
            t: 1,
            _symbol: std::marker::PhantomData,
        })
    }

    /// `k * floor((k-1)/2)`.
    pub fn length(k: u32) -> u64 {
        k as u64 * ((k as u64 - 1) / 2)
    }

    fn block_len(m: u32) -> u32 {
        if m % 2 == 1 {
            2 * m - 3
        } else {
            2 * m - 4
        }
    }
}

impl<S: Symbol> Iterator for Os2Stream<S> {
    type Item = S;

    fn next(&mut self) -> Option<S> {
        if self.m > self.k {
            return None;
        }
        let (m, t) = (self.m, self.t);
        let len = Self::block_len(m);
        let value = if m % 2 == 1 && t == len {
            m - 1
        } else if t % 2 == 1 {
            (t - 1) / 2
        } else if (t / 2) % 2 == 1 {
            m - 2
        } else {
            m - 1
        };
        if t == len {
            self.m += 2;
            self.t = 1;
        } else {
            self.t += 1;
        }
        Some(S::lift(value))
    }
}

/// Maximal-length orientable sequence of order 2, `k * floor((k-1)/2)` symbols.
pub fn generate_os2<S: Symbol>(k: u32) -> Result<Word<S>> {
    let symbols: Vec<S> = Os2Stream::new(k)?.collect();
    Ok(Word::from_raw(symbols, k))
}

/// Linearizes a cyclic sequence by appending its first `n-1` symbols.
pub fn to_acyclic<S: Symbol>(cyclic: &Word<S>, n: usize) -> Result<Word<S>> {
    if n == 0 {
        return Err(Error::Precondition {
            op: "to_acyclic",
            requirement: "n >= 1",
        });
    }
    let s = cyclic.symbols();
    let mut out = Vec::with_capacity(s.len() + n - 1);
    out.extend_from_slice(s);
    out.extend((0..n - 1).map(|i| s[i % s.len()]));
    Ok(Word::from_raw(out, cyclic.k()))
}
