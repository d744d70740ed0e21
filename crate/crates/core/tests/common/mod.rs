//! Brute-force oracles and the acceptance checks shared by the test targets.
//!
//! The oracles here follow the definitions literally (minimum over all
//! rotations, explicit reversal) and share no code with the library's
//! linear-time routines.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use orientseq::analysis::{
    brute_force_max_os, brute_force_s, lower_bound_l, stubborn_strings, trivial_upper_bound_m,
    verify_orientable,
};
use orientseq::cyclejoin::{
    build_tree, first_non_min, first_symbol, last_non_max, last_symbol, parent_verdict,
    second_last_non_max, tree_walk_cycle, Necklaces, ParentVerdict,
};
use orientseq::osgen::{generate_cyclic, generate_os2, SequenceStream};
use orientseq::{Word, Word8};

pub type Check = Result<(), String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn w(text: &str, k: u32) -> Word8 {
    Word::parse(text, k).unwrap()
}

// ---------------------------------------------------------------- oracles

pub fn all_words(n: usize, k: u32) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..k as u8).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

pub fn rotations(a: &[u8]) -> Vec<Vec<u8>> {
    (0..a.len()).map(|r| [&a[r..], &a[..r]].concat()).collect()
}

pub fn rev(a: &[u8]) -> Vec<u8> {
    a.iter().rev().copied().collect()
}

pub fn necklace_def(a: &[u8]) -> Vec<u8> {
    rotations(a).into_iter().min().unwrap()
}

pub fn bracelet_def(a: &[u8]) -> Vec<u8> {
    necklace_def(a).min(necklace_def(&rev(a)))
}

pub fn is_bracelet_def(a: &[u8]) -> bool {
    bracelet_def(a) == a
}

pub fn is_symmetric_def(a: &[u8]) -> bool {
    necklace_def(a) == necklace_def(&rev(a))
}

/// Membership in A_k(n).
pub fn in_a_def(a: &[u8]) -> bool {
    is_bracelet_def(a) && !is_symmetric_def(a)
}

pub fn is_pal(a: &[u8]) -> bool {
    a.iter().eq(a.iter().rev())
}

/// Whether `a` is a concatenation of two (possibly empty) palindromes.
pub fn palindromic_split(a: &[u8]) -> bool {
    (0..=a.len()).any(|p| is_pal(&a[..p]) && is_pal(&a[p..]))
}

pub fn l_oracle(n: usize, k: u32) -> usize {
    all_words(n, k)
        .iter()
        .filter(|a| in_a_def(&necklace_def(a)))
        .count()
}

pub fn cyclic_windows(seq: &[u8], n: usize) -> Vec<Vec<u8>> {
    (0..seq.len())
        .map(|i| (0..n).map(|t| seq[(i + t) % seq.len()]).collect())
        .collect()
}

/// Orientability by definition: all windows and reversed windows distinct.
pub fn orientable_def(seq: &[u8], n: usize) -> bool {
    let mut seen = BTreeSet::new();
    for win in cyclic_windows(seq, n) {
        let r = rev(&win);
        if win == r || seen.contains(&win) || seen.contains(&r) {
            return false;
        }
        seen.insert(win);
    }
    true
}

pub fn necklaces(n: usize, k: u32) -> impl Iterator<Item = Word8> {
    Necklaces::<u8>::new(n, k).unwrap()
}

fn in_a(wd: &Word8) -> bool {
    in_a_def(wd.symbols())
}

// ---------------------------------------------------------------- fixture

pub const TABLE2: &str = include_str!("../fixtures/table2.txt");

pub fn table2() -> Vec<(usize, u32, u128)> {
    TABLE2
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut f = l.split_whitespace();
            let n = f.next().unwrap().parse().unwrap();
            let k = f.next().unwrap().parse().unwrap();
            let v = f.next().unwrap().parse().unwrap();
            (n, k, v)
        })
        .collect()
}

pub fn table2_value(n: usize, k: u32) -> u128 {
    table2()
        .into_iter()
        .find(|&(a, b, _)| a == n && b == k)
        .map(|t| t.2)
        .unwrap_or_else(|| panic!("({n},{k}) not in fixture"))
}

// ---------------------------------------------------------------- criteria

pub const GENERATION_GRID: [(usize, u32, u128); 11] = [
    (3, 3, 3),
    (4, 3, 12),
    (5, 3, 60),
    (6, 3, 225),
    (8, 3, 2676),
    (12, 3, 257205),
    (3, 4, 12),
    (4, 4, 60),
    (5, 4, 360),
    (3, 5, 30),
    (4, 5, 180),
];

pub fn criterion_table2() -> Check {
    let start = Instant::now();
    let rows = table2();
    ensure(rows.len() == 108, || format!("fixture has {} rows", rows.len()))?;
    for (n, k, expected) in rows {
        let got = lower_bound_l::<u128>(n, k).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("L({n},{k}) = {got}, table {expected}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))
}

pub fn criterion_generation_length() -> Check {
    for (n, k, expected) in GENERATION_GRID {
        ensure(table2_value(n, k) == expected, || format!("grid value ({n},{k})"))?;
        let s = generate_cyclic::<u8>(n, k).map_err(|e| e.to_string())?;
        ensure(s.len() as u128 == expected, || {
            format!("({n},{k}): length {} expected {expected}", s.len())
        })?;
    }
    Ok(())
}

pub fn criterion_orientability() -> Check {
    for (n, k, _) in GENERATION_GRID {
        let s = generate_cyclic::<u8>(n, k).map_err(|e| e.to_string())?;
        let verdict = verify_orientable(&s, n).map_err(|e| e.to_string())?;
        ensure(verdict.is_ok(), || format!("({n},{k}): {verdict}"))?;
        if (k as u128).pow(n as u32) <= 10_000_000 {
            let windows: BTreeSet<Vec<u8>> = cyclic_windows(s.symbols(), n).into_iter().collect();
            ensure(windows.len() == s.len(), || format!("({n},{k}): repeated window"))?;
            let oracle: BTreeSet<Vec<u8>> = brute_force_s::<u8>(n, k)
                .map_err(|e| e.to_string())?
                .into_iter()
                .map(Word::into_symbols)
                .collect();
            ensure(windows == oracle, || format!("({n},{k}): window set differs from S"))?;
        }
    }
    Ok(())
}

pub fn criterion_oracle_equivalence(cases: &[(usize, u32)]) -> Check {
    for &(n, k) in cases {
        let tree = build_tree::<u8>(n, k).map_err(|e| e.to_string())?;
        let oracle = tree_walk_cycle(&tree);
        let stream: Vec<u8> = SequenceStream::<u8>::new(n, k)
            .map_err(|e| e.to_string())?
            .take(oracle.len() + 1)
            .collect();
        ensure(stream == oracle, || {
            let at = stream.iter().zip(&oracle).position(|(a, b)| a != b);
            format!(
                "({n},{k}): stream {} vs tree walk {} symbols, first difference at {at:?}",
                stream.len(),
                oracle.len()
            )
        })?;
    }
    Ok(())
}

pub const OS2_PRINTED: [(u32, &str); 6] = [
    (3, "012"),
    (4, "0213"),
    (5, "0120314234"),
    (6, "021304152435"),
    (7, "012031423405162536456"),
    (8, "021304152435061726374657"),
];

pub fn criterion_os2() -> Check {
    for k in 3..=30u32 {
        let s = generate_os2::<u8>(k).map_err(|e| e.to_string())?;
        let expected = k as usize * ((k as usize - 1) / 2);
        ensure(s.len() == expected, || format!("k={k}: length {}", s.len()))?;
        let verdict = verify_orientable(&s, 2).map_err(|e| e.to_string())?;
        ensure(verdict.is_ok(), || format!("k={k}: {verdict}"))?;
        ensure(orientable_def(s.symbols(), 2), || format!("k={k}: oracle rejects"))?;
    }
    for (k, text) in OS2_PRINTED {
        let got = generate_os2::<u8>(k).unwrap().render();
        ensure(got == text, || format!("U_{k} = {got}, expected {text}"))?;
    }
    Ok(())
}

pub fn criterion_structure() -> Check {
    for k in 3..=5u32 {
        for n in 3..=9usize {
            let tree = build_tree::<u8>(n, k).map_err(|e| format!("({n},{k}): {e}"))?;
            ensure(tree.check_chain_property(), || format!("({n},{k}): chain property"))?;
            for (child, edge) in tree.edges() {
                let node = &tree.nodes()[child];
                if edge.rule == orientseq::Rule::SecondLastNonMax {
                    ensure(k == 3, || format!("({n},{k}): {node} uses secondLastNonMax"))?;
                    ensure(node.symbols().ends_with(&[0, 1, 2]), || {
                        format!("({n},3): {node} lacks suffix 012")
                    })?;
                }
            }
            let l = lower_bound_l::<u128>(n, k).unwrap();
            ensure(tree.cycle_length() as u128 == l, || format!("({n},{k}): cycle length"))?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- lemmas

const LEMMA_GRID: [(u32, usize); 3] = [(3, 10), (4, 8), (5, 6)];

/// A necklace is symmetric iff it splits into two palindromes.
pub fn lemma_palindromic_split() -> Check {
    for k in 2..=4u32 {
        for n in 1..=10 {
            for a in necklaces(n, k) {
                let s = a.symbols();
                ensure(palindromic_split(s) == is_symmetric_def(s), || {
                    format!("{a}: split {} symmetric {}", palindromic_split(s), is_symmetric_def(s))
                })?;
            }
        }
    }
    Ok(())
}

/// firstNonMin keeps bracelets (and A) when the first non-zero exceeds 1.
pub fn lemma_first_non_min() -> Check {
    for (k, max_n) in LEMMA_GRID {
        for n in 2..=max_n {
            for a in necklaces(n, k) {
                let s = a.symbols();
                if !is_bracelet_def(s) || s.iter().all(|&x| x == 0) {
                    continue;
                }
                let i = s.iter().position(|&x| x != 0).unwrap();
                if s[i] <= 1 {
                    continue;
                }
                let b = first_non_min(&a).unwrap();
                ensure(is_bracelet_def(b.symbols()), || format!("{a} -> {b} not a bracelet"))?;
                if in_a(&a) {
                    ensure(in_a(&b), || format!("{a} in A but {b} is not"))?;
                }
            }
        }
    }
    Ok(())
}

/// lastNonMax keeps bracelets.
pub fn lemma_last_non_max() -> Check {
    for (k, max_n) in LEMMA_GRID {
        for n in 2..=max_n {
            for a in necklaces(n, k) {
                let s = a.symbols();
                if !is_bracelet_def(s) || s.iter().all(|&x| x as u32 == k - 1) {
                    continue;
                }
                let b = last_non_max(&a).unwrap();
                ensure(is_bracelet_def(b.symbols()), || format!("{a} -> {b} not a bracelet"))?;
            }
        }
    }
    Ok(())
}

/// Conditions (i)-(iii) under which lastNonMax stays in A, and the symmetric
/// outcome otherwise.
pub fn lemma_last_non_max_conditions() -> Check {
    for (k, max_n) in LEMMA_GRID {
        let top = (k - 1) as u8;
        for n in 3..=max_n {
            for a in necklaces(n, k).filter(in_a) {
                let s = a.symbols();
                let non_max: Vec<usize> = (0..n).filter(|&p| s[p] != top).collect();
                let j = non_max[non_max.len() - 1];
                let l = non_max[non_max.len() - 2];
                let cond_i = s[n - 1] < top;
                let cond_ii = (s[j] as u32) + 2 < k;
                let cond_iii = !is_pal(&s[..=l]);
                let b = last_non_max(&a).unwrap();
                if cond_i || cond_ii || cond_iii {
                    ensure(in_a(&b), || format!("{a}: conditions hold but {b} not in A"))?;
                } else {
                    ensure(is_bracelet_def(b.symbols()) && is_symmetric_def(b.symbols()), || {
                        format!("{a}: {b} should be a symmetric bracelet")
                    })?;
                }
            }
        }
    }
    Ok(())
}

/// When only firstNonMin of the first three rules stays in A, one of
/// lastNonMax or lastSymbol applied to it does. The exception is k = 3 with
/// firstNonMin(α) the root (α = 0^m 1 0^m 12), where neither does and none
/// is needed.
pub fn lemma_first_non_min_parent() -> Check {
    for (k, max_n) in LEMMA_GRID {
        for n in 3..=max_n {
            for a in necklaces(n, k).filter(in_a) {
                let lnm = last_non_max(&a).unwrap();
                let ls = last_symbol(&a).unwrap();
                let Ok(fnm) = first_non_min(&a) else { continue };
                if in_a(&lnm) || in_a(&ls) || !in_a(&fnm) {
                    continue;
                }
                if fnm == orientseq::root::<u8>(n, k).unwrap() {
                    let m = (n - 3) / 2;
                    let shape = format!("{z}1{z}12", z = "0".repeat(m));
                    ensure(k == 3 && n % 2 == 1 && a.render() == shape, || {
                        format!("{a} (k={k}) reaches the root unexpectedly")
                    })?;
                    continue;
                }
                let ok = last_non_max(&fnm).map(|b| in_a(&b)).unwrap_or(false)
                    || last_symbol(&fnm).map(|b| in_a(&b)).unwrap_or(false);
                ensure(ok, || format!("{a}: neither rule leaves {fnm} in A"))?;
            }
        }
    }
    Ok(())
}

pub fn lemma6_word(n: usize) -> Word8 {
    let text = format!("0010{}010012", "2".repeat(n - 10));
    w(&text, 3)
}

/// The family 00102^(n-10)010012 escapes the four simple rules.
pub fn lemma_counterexample_family() -> Check {
    for n in 12..=20 {
        let a = lemma6_word(n);
        ensure(a.len() == n, || format!("length {}", a.len()))?;
        ensure(in_a(&a), || format!("{a} not in A_3({n})"))?;
        for (name, b) in [
            ("firstSymbol", first_symbol(&a).unwrap()),
            ("lastSymbol", last_symbol(&a).unwrap()),
            ("firstNonMin", first_non_min(&a).unwrap()),
            ("lastNonMax", last_non_max(&a).unwrap()),
        ] {
            ensure(!in_a(&b), || format!("{name}({a}) = {b} is in A"))?;
        }
        let b = second_last_non_max(&a).unwrap();
        ensure(in_a(&b), || format!("secondLastNonMax({a}) = {b} not in A"))?;
        ensure(parent_verdict(&a) == ParentVerdict::BySecondLastNonMax, || {
            format!("{a}: verdict {}", parent_verdict(&a))
        })?;
    }
    Ok(())
}

/// For k >= 4 the first three rules suffice; for k = 3 the leftovers have the
/// form 0γ012 with γ a palindrome and secondLastNonMax succeeds.
pub fn lemma_well_defined() -> Check {
    for (k, max_n) in LEMMA_GRID {
        for n in 3..=max_n {
            if k == 3 && n == 3 {
                continue;
            }
            let root = orientseq::root::<u8>(n, k).unwrap();
            for a in necklaces(n, k).filter(in_a) {
                if a == root {
                    continue;
                }
                if in_a(&last_non_max(&a).unwrap()) || in_a(&last_symbol(&a).unwrap()) {
                    continue;
                }
                let fnm_in = first_non_min(&a).map(|b| in_a(&b)).unwrap_or(false);
                if k >= 4 {
                    ensure(fnm_in, || format!("{a}: firstNonMin leaves A for k={k}"))?;
                } else if !fnm_in {
                    let s = a.symbols();
                    ensure(s[0] == 0 && s.ends_with(&[0, 1, 2]) && is_pal(&s[1..n - 3]), || {
                        format!("{a} is not of the form 0γ012")
                    })?;
                    let b = second_last_non_max(&a).unwrap();
                    ensure(in_a(&b), || format!("{a}: secondLastNonMax gives {b}"))?;
                }
            }
        }
    }
    Ok(())
}

pub fn criterion_lemmas() -> Check {
    let checks: [(&str, fn() -> Check); 4] = [
        ("palindromic split", lemma_palindromic_split),
        ("firstNonMin", lemma_first_non_min),
        ("lastNonMax conditions", lemma_last_non_max_conditions),
        ("counterexample family", lemma_counterexample_family),
    ];
    for (name, check) in checks {
        let start = Instant::now();
        check().map_err(|e| format!("{name}: {e}"))?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(10), || format!("{name} took {elapsed:?}"))?;
    }
    Ok(())
}

// ---------------------------------------------------------------- maxima

pub const KNOWN_MAXIMA: [(&str, usize, u32); 4] = [
    ("001120122", 3, 3),
    ("00112012230130231233", 3, 4),
    ("00112003102210320331140142042132143043144223342344", 3, 5),
    ("000102001201112022101121022212", 4, 3),
];

pub fn criterion_known_maxima() -> Check {
    for (text, n, k) in KNOWN_MAXIMA {
        let s = w(text, k);
        let verdict = verify_orientable(&s, n).unwrap();
        ensure(verdict.is_ok(), || format!("{text}: {verdict}"))?;
        ensure(orientable_def(s.symbols(), n), || format!("{text}: oracle rejects"))?;
    }
    let lengths: Vec<usize> = KNOWN_MAXIMA.iter().map(|m| m.0.len()).collect();
    ensure(lengths == [9, 20, 50, 30], || format!("lengths {lengths:?}"))?;
    let m33 = brute_force_max_os(3, 3).map_err(|e| e.to_string())?;
    ensure(m33 == 9, || format!("M_3(3) search gave {m33}"))?;
    let m35 = trivial_upper_bound_m::<u64>(3, 5).unwrap();
    ensure(m35 == 50 && KNOWN_MAXIMA[2].0.len() as u64 == m35, || format!("M bound {m35}"))
}

// ---------------------------------------------------------------- slow tier

pub fn slow_enabled() -> bool {
    std::env::var("ORIENT_SEQ_SLOW").is_ok_and(|v| !v.is_empty() && v != "0")
}

pub fn criterion_stubborn() -> Check {
    let start = Instant::now();
    let hits = stubborn_strings::<u8>(20, 3).map_err(|e| e.to_string())?;
    ensure(hits.len() == 82, || format!("{} stubborn strings", hits.len()))?;
    for h in &hits {
        ensure(h.symbols().ends_with(&[0, 0, 1, 2]), || format!("{h} lacks suffix 0012"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))
}

// ---------------------------------------------------------------- performance

/// Nanoseconds per generated symbol at each n, k = 3.
pub fn time_per_symbol(ns: &[usize], symbols: u64) -> Vec<(usize, f64)> {
    ns.iter()
        .map(|&n| {
            let best = (0..3)
                .map(|_| {
                    let start = Instant::now();
                    let mut done = 0u64;
                    let mut acc = 0u64;
                    while done < symbols {
                        let stream = SequenceStream::<u8>::new(n, 3).unwrap();
                        for s in stream.take((symbols - done) as usize) {
                            acc += s as u64;
                            done += 1;
                        }
                    }
                    std::hint::black_box(acc);
                    start.elapsed().as_nanos() as f64 / symbols as f64
                })
                .fold(f64::INFINITY, f64::min);
            (n, best)
        })
        .collect()
}

/// Least-squares slope of ln(time) against ln(n).
pub fn log_log_slope(points: &[(usize, f64)]) -> f64 {
    let xs: Vec<f64> = points.iter().map(|p| (p.0 as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    cov / var
}

pub fn criterion_performance() -> Result<String, String> {
    let points = time_per_symbol(&[8, 16, 32, 64], 200_000);
    let slope = log_log_slope(&points);
    let detail = points
        .iter()
        .map(|(n, t)| format!("n={n}: {t:.0} ns"))
        .collect::<Vec<_>>()
        .join(", ");
    ensure(slope < 2.0, || format!("slope {slope:.2} ({detail})"))?;
    Ok(format!("slope {slope:.2} ({detail})"))
}
