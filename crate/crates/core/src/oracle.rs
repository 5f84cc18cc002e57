//! Brute-force references, written straight from the definitions and sharing
//! no code with the indexed structures. They reject texts longer than
//! [`MAX_LEN`] characters.

use crate::types::{Interval, Symbol};

pub const MAX_LEN: usize = 64;

fn guard(t: &[Symbol]) {
    assert!(t.len() <= MAX_LEN, "oracle input of length {} exceeds {MAX_LEN}", t.len());
}

/// The substring `t[i..=j]`, 1-based.
fn sub(t: &[Symbol], i: usize, j: usize) -> &[Symbol] {
    &t[i - 1..j]
}

fn is_pal(s: &[Symbol]) -> bool {
    (0..s.len() / 2).all(|x| s[x] == s[s.len() - 1 - x])
}

/// Occurrences of `pat` in `t`; the empty pattern counts as non-unique.
pub fn oracle_count(t: &[Symbol], pat: &[Symbol]) -> usize {
    guard(t);
    if pat.is_empty() {
        return t.len() + 2;
    }
    if pat.len() > t.len() {
        return 0;
    }
    (0..=t.len() - pat.len()).filter(|&s| &t[s..s + pat.len()] == pat).count()
}

/// Radius of the maximal palindrome at every center `k = 1..2n-1`.
pub fn oracle_arms(t: &[Symbol]) -> Vec<usize> {
    guard(t);
    let n = t.len() as isize;
    (1..2 * n)
        .map(|k| {
            // left/right 0-based indices of the first compared pair
            let (mut l, mut r) = if k % 2 == 1 { ((k - 1) / 2 - 1, (k - 1) / 2 + 1) } else { (k / 2 - 1, k / 2) };
            let mut arm = 0;
            while l >= 0 && r < n && t[l as usize] == t[r as usize] {
                arm += 1;
                l -= 1;
                r += 1;
            }
            arm
        })
        .collect()
}

/// MUPSs by checking every substring, sorted by start.
pub fn oracle_mups(t: &[Symbol]) -> Vec<Interval> {
    guard(t);
    let n = t.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let s = sub(t, i, j);
            if !is_pal(s) || oracle_count(t, s) != 1 {
                continue;
            }
            let inner: &[Symbol] = if j - i >= 2 { sub(t, i + 1, j - 1) } else { &[] };
            if oracle_count(t, inner) != 1 {
                out.push(Interval { start: i, end: j });
            }
        }
    }
    out
}

/// MUPSs enumerated by length, then start, with occurrences found by
/// sliding comparison. Used to cross-check [`oracle_mups`].
pub fn oracle_mups_by_length(t: &[Symbol]) -> Vec<Interval> {
    guard(t);
    let n = t.len();
    let occurrences = |s: &[Symbol]| -> usize {
        if s.is_empty() {
            return usize::MAX;
        }
        t.windows(s.len()).filter(|w| w.iter().rev().eq(s.iter().rev())).count()
    };
    let mut out = Vec::new();
    for len in 1..=n {
        for i in 1..=n + 1 - len {
            let j = i + len - 1;
            let s = &t[i - 1..j];
            let inner = if len > 2 { &s[1..len - 1] } else { &[] };
            if s.iter().eq(s.iter().rev()) && occurrences(s) == 1 && occurrences(inner) != 1 {
                out.push(Interval { start: i, end: j });
            }
        }
    }
    out.sort();
    out
}

/// Every unique palindromic substring of `t`.
pub fn unique_palindromes(t: &[Symbol]) -> Vec<Interval> {
    guard(t);
    let n = t.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let s = sub(t, i, j);
            if is_pal(s) && oracle_count(t, s) == 1 {
                out.push(Interval { start: i, end: j });
            }
        }
    }
    out
}

/// Shortest unique palindromes among `unique` that contain `[p, q]`,
/// sorted by start.
pub fn sups_from_unique(unique: &[Interval], p: usize, q: usize) -> Vec<Interval> {
    let covering = unique.iter().filter(|iv| iv.start <= p && q <= iv.end);
    let Some(best) = covering.clone().map(Interval::len).min() else {
        return Vec::new();
    };
    let mut out: Vec<Interval> = covering.filter(|iv| iv.len() == best).copied().collect();
    out.sort();
    out
}

/// SUPSs of `[p, q]` in `t`, by definition.
pub fn oracle_sups(t: &[Symbol], p: usize, q: usize) -> Vec<Interval> {
    assert!(1 <= p && p <= q && q <= t.len(), "query [{p}, {q}] outside the text");
    sups_from_unique(&unique_palindromes(t), p, q)
}

/// Leftmost minimum of `a[i..=j]`, 1-based.
pub fn oracle_rmq(a: &[i64], i: usize, j: usize) -> usize {
    let mut best = i;
    for x in i..=j {
        if a[x - 1] < a[best - 1] {
            best = x;
        }
    }
    best
}

/// Smallest period of `s`.
pub fn oracle_period(s: &[Symbol]) -> usize {
    (1..=s.len())
        .find(|&p| (0..s.len() - p).all(|x| s[x] == s[x + p]))
        .unwrap_or(s.len())
}
