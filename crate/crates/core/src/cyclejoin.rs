//! Parent rules, the cycle-joining tree over asymmetric bracelets, and the
//! chain machinery used by the generic (tree-walk) successor.
//!
//! Nodes are stored as full-length necklaces even when periodic; a periodic
//! node contributes only its aperiodic prefix to the joined cycle.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symbol::Symbol;
use crate::word::{
    check_alphabet, classify_slice, least_rotation, render_symbols,
    BraceletClass, Word,
};

#[inline]
pub(crate) fn inc<S: Symbol>(x: S, k: u32) -> S {
    S::lift((x.value() + 1) % k)
}

#[inline]
pub(crate) fn dec<S: Symbol>(x: S, k: u32) -> S {
    S::lift((x.value() + k - 1) % k)
}

/// The five single-symbol modifications used to relate a node to its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// Decrement the first symbol, then take the necklace.
    FirstSymbol,
    /// Increment the last symbol (mod k), then take the necklace.
    LastSymbol,
    /// Decrement the first non-zero symbol.
    FirstNonMin,
    /// Increment the last symbol that is not `k-1`.
    LastNonMax,
    /// Increment the second last symbol that is not `k-1`.
    SecondLastNonMax,
}

impl Rule {
    /// The parent rule tries these in order and keeps the first hit in A_k(n).
    pub const PARENT_ORDER: [Rule; 4] = [
        Rule::LastNonMax,
        Rule::LastSymbol,
        Rule::FirstNonMin,
        Rule::SecondLastNonMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::FirstSymbol => "firstSymbol",
            Rule::LastSymbol => "lastSymbol",
            Rule::FirstNonMin => "firstNonMin",
            Rule::LastNonMax => "lastNonMax",
            Rule::SecondLastNonMax => "secondLastNonMax",
        }
    }

    fn canonicalizes(self) -> bool {
        matches!(self, Rule::FirstSymbol | Rule::LastSymbol)
    }
}

/// A single-symbol change: position (0-based) and the symbol written there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Change<S> {
    pub position: usize,
    pub symbol: S,
}

/// Locates the symbol `rule` changes in `a`, or `None` when the rule does not
/// apply (all zeros for `FirstNonMin`, fewer than one/two non-max symbols for
/// the `*NonMax` rules).
pub(crate) fn locate<S: Symbol>(rule: Rule, a: &[S], k: u32) -> Option<Change<S>> {
    let n = a.len();
    let max = k - 1;
    match rule {
        Rule::FirstSymbol => Some(Change {
            position: 0,
            symbol: dec(a[0], k),
        }),
        Rule::LastSymbol => Some(Change {
            position: n - 1,
            symbol: inc(a[n - 1], k),
        }),
        Rule::FirstNonMin => a.iter().position(|s| s.value() != 0).map(|p| Change {
            position: p,
            symbol: dec(a[p], k),
        }),
        Rule::LastNonMax => a.iter().rposition(|s| s.value() != max).map(|p| Change {
            position: p,
            symbol: inc(a[p], k),
        }),
        Rule::SecondLastNonMax => a
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, s)| s.value() != max)
            .nth(1)
            .map(|(p, _)| Change {
                position: p,
                symbol: inc(a[p], k),
            }),
    }
}

/// Writes `rule(a)` into `out`. Returns the change applied, or `None` when the
/// rule is undefined for `a`.
pub(crate) fn apply_into<S: Symbol>(
    rule: Rule,
    a: &[S],
    k: u32,
    out: &mut Vec<S>,
) -> Option<Change<S>> {
    let change = locate(rule, a, k)?;
    out.clear();
    out.extend_from_slice(a);
    out[change.position] = change.symbol;
    if rule.canonicalizes() {
        let r = least_rotation(out);
        out.rotate_left(r);
    }
    Some(change)
}

fn apply_rule<S: Symbol>(
    rule: Rule,
    a: &Word<S>,
    requirement: &'static str,
) -> Result<Word<S>> {
    if !a.is_necklace() {
        return Err(Error::Precondition {
            op: rule.name(),
            requirement: "a necklace",
        });
    }
    let mut out = Vec::with_capacity(a.len());
    apply_into(rule, a.symbols(), a.k(), &mut out).ok_or(Error::Precondition {
        op: rule.name(),
        requirement,
    })?;
    Ok(Word::from_raw(out, a.k()))
}

/// Necklace of `a` with its first symbol decremented mod k.
pub fn first_symbol<S: Symbol>(a: &Word<S>) -> Result<Word<S>> {
    apply_rule(Rule::FirstSymbol, a, "a necklace")
}

/// Necklace of `a` with its last symbol incremented mod k.
pub fn last_symbol<S: Symbol>(a: &Word<S>) -> Result<Word<S>> {
    apply_rule(Rule::LastSymbol, a, "a necklace")
}

/// `a` with its first non-zero symbol decremented. Undefined for `0^n`.
pub fn first_non_min<S: Symbol>(a: &Word<S>) -> Result<Word<S>> {
    apply_rule(Rule::FirstNonMin, a, "a non-zero symbol")
}

/// `a` with its last non-`(k-1)` symbol incremented. Undefined for `(k-1)^n`.
pub fn last_non_max<S: Symbol>(a: &Word<S>) -> Result<Word<S>> {
    apply_rule(Rule::LastNonMax, a, "a symbol below k-1")
}

/// `a` with its second last non-`(k-1)` symbol incremented.
///
/// Unlike the other rules the input need not be a necklace.
pub fn second_last_non_max<S: Symbol>(a: &Word<S>) -> Result<Word<S>> {
    let mut out = Vec::with_capacity(a.len());
    apply_into(Rule::SecondLastNonMax, a.symbols(), a.k(), &mut out).ok_or(
        Error::Precondition {
            op: "secondLastNonMax",
            requirement: "two symbols below k-1",
        },
    )?;
    Ok(Word::from_raw(out, a.k()))
}

/// `0^(n-2) (k-2) (k-1)`, the root of the tree.
pub fn root<S: Symbol>(n: usize, k: u32) -> Result<Word<S>> {
    check_alphabet::<S>(k)?;
    if n < 2 {
        return Err(Error::Unsupported {
            n,
            k,
            reason: "the root needs n >= 2",
        });
    }
    let mut symbols = vec![S::zero(); n];
    symbols[n - 2] = S::lift(k - 2);
    symbols[n - 1] = S::lift(k - 1);
    Ok(Word::from_raw(symbols, k))
}

fn is_root<S: Symbol>(a: &[S], k: u32) -> bool {
    let n = a.len();
    n >= 2
        && a[..n - 2].iter().all(|s| s.value() == 0)
        && a[n - 2].value() == k - 2
        && a[n - 1].value() == k - 1
}

/// Which parent rule applies to a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParentVerdict {
    Root,
    NotInA,
    ByLastNonMax,
    ByLastSymbol,
    ByFirstNonMin,
    BySecondLastNonMax,
    /// No rule lands in A_k(n). Only reachable outside `n, k >= 3`.
    Unresolved,
}

impl ParentVerdict {
    pub fn rule(self) -> Option<Rule> {
        match self {
            ParentVerdict::ByLastNonMax => Some(Rule::LastNonMax),
            ParentVerdict::ByLastSymbol => Some(Rule::LastSymbol),
            ParentVerdict::ByFirstNonMin => Some(Rule::FirstNonMin),
            ParentVerdict::BySecondLastNonMax => Some(Rule::SecondLastNonMax),
            _ => None,
        }
    }

    fn from_rule(rule: Rule) -> Self {
        match rule {
            Rule::LastNonMax => ParentVerdict::ByLastNonMax,
            Rule::LastSymbol => ParentVerdict::ByLastSymbol,
            Rule::FirstNonMin => ParentVerdict::ByFirstNonMin,
            Rule::SecondLastNonMax => ParentVerdict::BySecondLastNonMax,
            Rule::FirstSymbol => unreachable!("firstSymbol is not part of the parent rule"),
        }
    }
}

impl fmt::Display for ParentVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Scratch space for allocation-free verdicts on the hot path.
#[derive(Debug, Default, Clone)]
pub(crate) struct Scratch<S> {
    buf: Vec<S>,
}

impl<S: Symbol> Scratch<S> {
    pub fn new() -> Self {
        Scratch { buf: Vec::new() }
    }

    /// Verdict for `a` together with the change the chosen rule makes.
    pub fn verdict(&mut self, a: &[S], k: u32) -> (ParentVerdict, Option<Change<S>>) {
        if classify_slice(a) != BraceletClass::AsymmetricBracelet {
            return (ParentVerdict::NotInA, None);
        }
        if is_root(a, k) {
            return (ParentVerdict::Root, None);
        }
        for rule in Rule::PARENT_ORDER {
            if let Some(change) = apply_into(rule, a, k, &mut self.buf) {
                if classify_slice(&self.buf) == BraceletClass::AsymmetricBracelet {
                    return (ParentVerdict::from_rule(rule), Some(change));
                }
            }
        }
        (ParentVerdict::Unresolved, None)
    }

    /// True iff `a` is in A_k(n) and its parent is obtained by `rule`.
    #[inline]
    pub fn has_parent_rule(&mut self, a: &[S], k: u32, rule: Rule) -> bool {
        self.verdict(a, k).0.rule() == Some(rule)
    }
}

pub fn parent_verdict<S: Symbol>(a: &Word<S>) -> ParentVerdict {
    Scratch::new().verdict(a.symbols(), a.k()).0
}

/// The two strings `x·β` and `y·β` joining a child cycle to its parent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugatePair<S> {
    pub shared_suffix: Vec<S>,
    pub child_first: S,
    pub parent_first: S,
}

impl<S: Symbol> ConjugatePair<S> {
    /// The pair for changing position `position` of `child` to `new_symbol`.
    fn from_change(child: &[S], change: Change<S>) -> Self {
        let n = child.len();
        let p = change.position;
        let mut shared_suffix = Vec::with_capacity(n - 1);
        shared_suffix.extend_from_slice(&child[p + 1..]);
        shared_suffix.extend_from_slice(&child[..p]);
        ConjugatePair {
            shared_suffix,
            child_first: child[p],
            parent_first: change.symbol,
        }
    }

    pub fn child_string(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(self.shared_suffix.len() + 1);
        v.push(self.child_first);
        v.extend_from_slice(&self.shared_suffix);
        v
    }

    pub fn parent_string(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(self.shared_suffix.len() + 1);
        v.push(self.parent_first);
        v.extend_from_slice(&self.shared_suffix);
        v
    }

    pub fn contains(&self, w: &[S]) -> bool {
        w.len() == self.shared_suffix.len() + 1
            && w[1..] == self.shared_suffix[..]
            && (w[0] == self.child_first || w[0] == self.parent_first)
    }
}

/// Parent of a non-root member of A_k(n) and the conjugate pair joining them.
pub fn parent<S: Symbol>(a: &Word<S>) -> Result<(Word<S>, ConjugatePair<S>)> {
    let mut scratch = Scratch::new();
    let (verdict, change) = scratch.verdict(a.symbols(), a.k());
    let (rule, change) = match (verdict.rule(), change) {
        (Some(rule), Some(change)) => (rule, change),
        _ => {
            return Err(Error::Precondition {
                op: "parent",
                requirement: "a non-root asymmetric bracelet",
            })
        }
    };
    let mut out = Vec::with_capacity(a.len());
    apply_into(rule, a.symbols(), a.k(), &mut out);
    let pair = ConjugatePair::from_change(a.symbols(), change);
    Ok((Word::from_raw(out, a.k()), pair))
}

/// Iterative generation of k-ary necklaces of length n in lexicographic order.
///
/// Amortized constant time per necklace; `advance` hands out a borrowed slice
/// so callers scanning all necklaces never allocate.
#[derive(Debug, Clone)]
pub struct Necklaces<S> {
    a: Vec<S>,
    k: u32,
    started: bool,
    done: bool,
}

impl<S: Symbol> Necklaces<S> {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        check_alphabet::<S>(k)?;
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        Ok(Necklaces {
            a: vec![S::zero(); n],
            k,
            started: false,
            done: false,
        })
    }

    pub fn advance(&mut self) -> Option<&[S]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.a);
        }
        let n = self.a.len();
        let max = self.k - 1;
        loop {
            let Some(i) = self.a.iter().rposition(|s| s.value() != max) else {
                self.done = true;
                return None;
            };
            self.a[i] = inc(self.a[i], self.k);
            let p = i + 1;
            for j in p..n {
                self.a[j] = self.a[j - p];
            }
            if n.is_multiple_of(p) {
                return Some(&self.a);
            }
        }
    }
}

impl<S: Symbol> Iterator for Necklaces<S> {
    type Item = Word<S>;

    fn next(&mut self) -> Option<Word<S>> {
        let k = self.k;
        self.advance().map(|s| Word::from_raw(s.to_vec(), k))
    }
}

/// All k-ary asymmetric bracelets of length n, in lexicographic order.
pub fn enumerate_asymmetric_bracelets<S: Symbol>(n: usize, k: u32) -> Result<Vec<Word<S>>> {
    let mut gen = Necklaces::<S>::new(n, k)?;
    let mut out = Vec::new();
    while let Some(s) = gen.advance() {
        if classify_slice(s) == BraceletClass::AsymmetricBracelet {
            out.push(Word::from_raw(s.to_vec(), k));
        }
    }
    Ok(out)
}

/// A child-to-parent edge of a cycle-joining tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge<S> {
    pub parent: usize,
    pub pair: ConjugatePair<S>,
    pub rule: Rule,
}

/// Rooted tree of rotation classes joined by conjugate pairs.
#[derive(Debug, Clone)]
pub struct CycleJoinTree<S: Symbol> {
    n: usize,
    k: u32,
    nodes: Vec<Word<S>>,
    edges: Vec<Option<TreeEdge<S>>>,
    root: usize,
    index: HashMap<Vec<S>, usize>,
}

/// Builds T_k(n): nodes A_k(n), each non-root node joined to `parent(a)`.
pub fn build_tree<S: Symbol>(n: usize, k: u32) -> Result<CycleJoinTree<S>> {
    if n < 3 || k < 3 {
        return Err(Error::Unsupported {
            n,
            k,
            reason: "the cycle-joining tree needs n >= 3 and k >= 3",
        });
    }
    let nodes = enumerate_asymmetric_bracelets::<S>(n, k)?;
    let root_word = root::<S>(n, k)?;
    let mut scratch = Scratch::new();
    let mut buf = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(nodes.len());
    for node in &nodes {
        let (verdict, change) = scratch.verdict(node.symbols(), k);
        match (verdict, verdict.rule(), change) {
            (ParentVerdict::Root, _, _) => edges.push(None),
            (_, Some(rule), Some(change)) => {
                apply_into(rule, node.symbols(), k, &mut buf);
                let parent = Word::from_raw(buf.clone(), k);
                let pair = ConjugatePair::from_change(node.symbols(), change);
                edges.push(Some((parent, pair, rule)));
            }
            _ => panic!("node {node} has verdict {verdict}; parent rule is not well-defined"),
        }
    }
    let tree = CycleJoinTree::assemble(n, k, nodes, &root_word, edges)
        .expect("parent rule must induce a tree rooted at r(n,k)");
    Ok(tree)
}

impl<S: Symbol> CycleJoinTree<S> {
    /// Assembles a tree from explicit parent links. Every non-root node must
    /// carry exactly one edge whose parent is a node, and every parent chain
    /// must end at `root`.
    pub fn from_parts(
        n: usize,
        k: u32,
        nodes: Vec<Word<S>>,
        root: &Word<S>,
        edges: Vec<Option<(Word<S>, ConjugatePair<S>, Rule)>>,
    ) -> Result<Self> {
        Self::assemble(n, k, nodes, root, edges)
    }

    fn assemble(
        n: usize,
        k: u32,
        nodes: Vec<Word<S>>,
        root: &Word<S>,
        edges: Vec<Option<(Word<S>, ConjugatePair<S>, Rule)>>,
    ) -> Result<Self> {
        let malformed = |requirement| Error::Precondition {
            op: "cycle-joining tree",
            requirement,
        };
        if nodes.len() != edges.len() {
            return Err(malformed("one edge slot per node"));
        }
        let index: HashMap<Vec<S>, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, w)| (w.symbols().to_vec(), i))
            .collect();
        if index.len() != nodes.len() {
            return Err(malformed("distinct nodes"));
        }
        let root_idx = *index
            .get(root.symbols())
            .ok_or(malformed("the root among the nodes"))?;
        let mut resolved = Vec::with_capacity(nodes.len());
        for (i, edge) in edges.into_iter().enumerate() {
            match edge {
                None if i == root_idx => resolved.push(None),
                None => return Err(malformed("a parent for every non-root node")),
                Some(_) if i == root_idx => return Err(malformed("a parentless root")),
                Some((parent, pair, rule)) => {
                    let p = *index
                        .get(parent.symbols())
                        .ok_or(malformed("parents among the nodes"))?;
                    resolved.push(Some(TreeEdge { parent: p, pair, rule }));
                }
            }
        }
        let tree = CycleJoinTree {
            n,
            k,
            nodes,
            edges: resolved,
            root: root_idx,
            index,
        };
        if !tree.all_reach_root() {
            return Err(malformed("parent chains that terminate at the root"));
        }
        Ok(tree)
    }

    fn all_reach_root(&self) -> bool {
        // 0 = unknown, 1 = on current path, 2 = reaches root
        let mut state = vec![0u8; self.nodes.len()];
        state[self.root] = 2;
        let mut path = Vec::new();
        for start in 0..self.nodes.len() {
            let mut v = start;
            while state[v] == 0 {
                state[v] = 1;
                path.push(v);
                v = match &self.edges[v] {
                    Some(e) => e.parent,
                    None => return false,
                };
            }
            if state[v] == 1 {
                return false;
            }
            for u in path.drain(..) {
                state[u] = 2;
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Word<S>] {
        &self.nodes
    }

    pub fn root(&self) -> &Word<S> {
        &self.nodes[self.root]
    }

    pub fn index_of(&self, w: &Word<S>) -> Option<usize> {
        self.index.get(w.symbols()).copied()
    }

    pub fn edge(&self, node: usize) -> Option<&TreeEdge<S>> {
        self.edges[node].as_ref()
    }

    pub fn parent_of(&self, w: &Word<S>) -> Option<(&Word<S>, &ConjugatePair<S>)> {
        let e = self.edge(self.index_of(w)?)?;
        Some((&self.nodes[e.parent], &e.pair))
    }

    /// `(child, edge)` for every non-root node.
    pub fn edges(&self) -> impl Iterator<Item = (usize, &TreeEdge<S>)> {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.as_ref().map(|e| (i, e)))
    }

    /// Total number of strings covered: Σ |ap(node)|.
    pub fn cycle_length(&self) -> usize {
        self.nodes.iter().map(|w| w.aperiodic_prefix().len()).sum()
    }

    /// No node has two child edges sharing the same length-(n-1) suffix.
    pub fn check_chain_property(&self) -> bool {
        let mut seen: HashSet<(usize, &[S])> = HashSet::new();
        self.edges()
            .all(|(_, e)| seen.insert((e.parent, e.pair.shared_suffix.as_slice())))
    }

    /// No string belongs to two distinct conjugate pairs.
    pub fn check_uniqueness_property(&self) -> bool {
        let mut seen: HashSet<Vec<S>> = HashSet::new();
        self.edges().all(|(_, e)| {
            let c = e.pair.child_string();
            let p = e.pair.parent_string();
            seen.insert(c) && seen.insert(p)
        })
    }

    pub fn chains(&self) -> ChainIndex<S> {
        ChainIndex::new(self)
    }

    /// Graphviz rendering: one node per bracelet, edges child → parent labelled
    /// with the changed symbol pair and coloured by the rule used.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph cycle_join_tree_n{}_k{} {{", self.n, self.k);
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for (i, w) in self.nodes.iter().enumerate() {
            if i == self.root {
                let _ = writeln!(out, "  \"{w}\" [style=bold];");
            } else {
                let _ = writeln!(out, "  \"{w}\";");
            }
        }
        for (child, e) in self.edges() {
            let colour = match e.rule {
                Rule::LastNonMax => "blue",
                Rule::LastSymbol => "red",
                Rule::FirstNonMin => "black",
                Rule::SecondLastNonMax => "darkgreen",
                Rule::FirstSymbol => "gray",
            };
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}/{}\", color={colour}];",
                self.nodes[child],
                self.nodes[e.parent],
                render_symbols(&[e.pair.child_first], self.k),
                render_symbols(&[e.pair.parent_first], self.k),
            );
        }
        out.push_str("}\n");
        out
    }
}

/// `Next` for every string belonging to some conjugate pair of a tree.
///
/// Pairs sharing a suffix β form chains `x_1β, .., x_mβ` from the topmost
/// ancestor down; `Next(x_iβ) = x_{i+1}` and the bottom wraps to `x_1`.
#[derive(Debug, Clone)]
pub struct ChainIndex<S> {
    next: HashMap<Vec<S>, Vec<(S, S)>>,
}

impl<S: Symbol> ChainIndex<S> {
    pub fn new(tree: &CycleJoinTree<S>) -> Self {
        // per suffix: child_first -> parent_first
        let mut up: HashMap<&[S], HashMap<S, S>> = HashMap::new();
        for (_, e) in tree.edges() {
            up.entry(e.pair.shared_suffix.as_slice())
                .or_default()
                .insert(e.pair.child_first, e.pair.parent_first);
        }
        let mut next = HashMap::with_capacity(up.len());
        for (suffix, links) in up {
            let down: HashMap<S, S> = links.iter().map(|(&c, &p)| (p, c)).collect();
            let mut map = Vec::new();
            for &top in down.keys().filter(|x| !links.contains_key(x)) {
                let mut cur = top;
                while let Some(&below) = down.get(&cur) {
                    map.push((cur, below));
                    cur = below;
                }
                map.push((cur, top));
            }
            next.insert(suffix.to_vec(), map);
        }
        ChainIndex { next }
    }

    /// `Next(w)` if `w` belongs to some conjugate pair.
    pub fn next(&self, w: &[S]) -> Option<S> {
        let (&first, suffix) = w.split_first()?;
        self.next
            .get(suffix)?
            .iter()
            .find(|(x, _)| *x == first)
            .map(|&(_, y)| y)
    }

    /// The generic successor: `Next(w)` on a conjugate pair, else `w[0]`.
    pub fn successor(&self, w: &[S]) -> S {
        self.next(w).unwrap_or(w[0])
    }
}

/// `Next` for a word of length n, erroring when it is in no conjugate pair.
pub fn next_in_chain<S: Symbol>(chains: &ChainIndex<S>, w: &Word<S>) -> Result<S> {
    chains.next(w.symbols()).ok_or(Error::Precondition {
        op: "next_in_chain",
        requirement: "a string belonging to a conjugate pair",
    })
}

/// Joins every cycle of `tree` by walking the generic successor from the root
/// until the window returns to it. Exponential space; an oracle for small n.
pub fn tree_walk_cycle<S: Symbol>(tree: &CycleJoinTree<S>) -> Vec<S> {
    let chains = tree.chains();
    let seed = tree.root().symbols().to_vec();
    let mut window = seed.clone();
    let limit = tree.cycle_length();
    let mut out = Vec::with_capacity(limit);
    loop {
        out.push(window[0]);
        let next = chains.successor(&window);
        window.rotate_left(1);
        *window.last_mut().unwrap() = next;
        if window == seed {
            return out;
        }
        assert!(out.len() <= limit, "tree walk failed to close");
    }
}
