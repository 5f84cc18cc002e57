//! Bidirectional longest-common-extension index.
//!
//! Built over `T # T^R $` with a suffix array, its LCP array and a sparse
//! table, so that forward/forward, backward/backward and forward/backward
//! extensions are each one range-minimum lookup. The same suffix ordering
//! answers occurrence counts of substrings of `T`.

use crate::error::{Error, Result};
use crate::types::{CenterIndex, Interval, Pos, Symbol, Text};

/// Sparse table over `u32` answering range minima in O(1).
#[derive(Clone, Debug)]
pub struct SparseTable {
    rows: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: &[u32]) -> Self {
        let mut rows = vec![values.to_vec()];
        let mut width = 1;
        while 2 * width <= values.len() {
            let prev = rows.last().unwrap();
            let row = (0..=values.len() - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            rows.push(row);
            width *= 2;
        }
        SparseTable { rows }
    }

    /// Minimum of `values[l..=r]`.
    pub fn min(&self, l: usize, r: usize) -> u32 {
        debug_assert!(l <= r);
        let level = (r - l + 1).ilog2() as usize;
        let row = &self.rows[level];
        row[l].min(row[r + 1 - (1 << level)])
    }
}

/// Prefix-doubling suffix array, O(n log^2 n).
pub fn suffix_array(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    let mut next = vec![0usize; n];
    let mut k = 1;
    loop {
        let key = |i: usize, rank: &[usize]| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i, &rank));
        next[sa[0]] = 0;
        for w in 1..n {
            let bump = key(sa[w - 1], &rank) < key(sa[w], &rank);
            next[sa[w]] = next[sa[w - 1]] + bump as usize;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] == n - 1 || k >= n {
            break;
        }
        k *= 2;
    }
    sa.into_iter().map(|i| i as u32).collect()
}

/// Kasai's algorithm: `lcp[r]` is the LCP of suffixes `sa[r-1]` and `sa[r]`.
pub fn lcp_array(s: &[u32], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Bidirectional LCE index over a fixed text.
#[derive(Clone, Debug)]
pub struct LceIndex {
    chars: Vec<Symbol>,
    origin: Pos,
    sa: Vec<u32>,
    rank: Vec<u32>,
    lcp: SparseTable,
    /// `forward[r]` counts suffixes of the forward copy among `sa[..r]`.
    forward: Vec<u32>,
}

impl LceIndex {
    pub fn build(text: &Text) -> Result<Self> {
        Self::from_symbols(text.chars(), text.origin())
    }

    pub fn from_symbols(chars: &[Symbol], origin: Pos) -> Result<Self> {
        if chars.is_empty() {
            return Err(Error::EmptyText);
        }
        let n = chars.len();
        let mut s = Vec::with_capacity(2 * n + 2);
        s.extend(chars.iter().map(|&c| c + 2));
        s.push(1);
        s.extend(chars.iter().rev().map(|&c| c + 2));
        s.push(0);
        let sa = suffix_array(&s);
        let mut rank = vec![0u32; s.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i as usize] = r as u32;
        }
        let lcp = lcp_array(&s, &sa, &rank);
        let mut forward = Vec::with_capacity(sa.len() + 1);
        forward.push(0);
        for &i in &sa {
            let last = *forward.last().unwrap();
            forward.push(last + ((i as usize) < n) as u32);
        }
        Ok(LceIndex {
            chars: chars.to_vec(),
            origin,
            sa,
            rank,
            lcp: SparseTable::new(&lcp),
            forward,
        })
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn begin(&self) -> Pos {
        self.origin
    }

    pub fn end(&self) -> Pos {
        self.origin + self.chars.len() - 1
    }

    pub fn symbol(&self, pos: Pos) -> Symbol {
        self.chars[pos - self.origin]
    }

    fn in_text(&self, pos: Pos) -> bool {
        pos >= self.origin && pos <= self.end()
    }

    /// Offset of the forward suffix starting at `pos`.
    fn fwd(&self, pos: Pos) -> usize {
        pos - self.origin
    }

    /// Offset of the reversed prefix ending at `pos`.
    fn bwd(&self, pos: Pos) -> usize {
        let n = self.chars.len();
        n + 1 + (self.end() - pos)
    }

    fn raw(&self, x: usize, y: usize) -> usize {
        if x == y {
            return self.sa.len() - x;
        }
        let (a, b) = (self.rank[x] as usize, self.rank[y] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.lcp.min(lo + 1, hi) as usize
    }

    fn check(&self, pos: Pos) -> Result<()> {
        if self.in_text(pos) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                start: pos,
                end: pos,
                lo: self.origin,
                hi: self.end(),
            })
        }
    }

    /// Longest common prefix of the suffixes starting at `i` and `j`.
    pub fn lce_ff(&self, i: Pos, j: Pos) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Ok(self.end() - i + 1);
        }
        Ok(self.raw(self.fwd(i), self.fwd(j)))
    }

    /// Longest common suffix of the prefixes ending at `i` and `j`.
    pub fn lce_bb(&self, i: Pos, j: Pos) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Ok(i - self.origin + 1);
        }
        Ok(self.raw(self.bwd(i), self.bwd(j)))
    }

    /// Number of steps `t` with `T[i + t] == T[j - t]`, starting at `t = 0`.
    pub fn lce_fb(&self, i: Pos, j: Pos) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.raw(self.fwd(i), self.bwd(j)))
    }

    /// `lce_fb` that reads out-of-text positions as an immediate mismatch.
    fn extend(&self, right: Pos, left: Pos) -> usize {
        if left < self.origin || !self.in_text(right) || !self.in_text(left) {
            0
        } else {
            self.raw(self.fwd(right), self.bwd(left))
        }
    }

    /// First pair `(right, left)` compared when growing a palindrome at `k`.
    fn first_pair(k: CenterIndex) -> (Pos, Pos) {
        if k.is_odd() {
            let c = k.0.div_ceil(2);
            (c + 1, c - 1)
        } else {
            let c = k.0 / 2;
            (c + 1, c)
        }
    }

    fn check_center(&self, k: CenterIndex) -> Result<()> {
        if k.0 + 1 < 2 * self.origin || k.0 > 2 * self.end() - 1 {
            return Err(Error::OutOfRange {
                start: k.0,
                end: k.0,
                lo: 2 * self.origin - 1,
                hi: 2 * self.end() - 1,
            });
        }
        Ok(())
    }

    /// Radius of the maximal palindrome centered at `k`.
    pub fn max_pal_radius_at(&self, k: CenterIndex) -> Result<usize> {
        self.check_center(k)?;
        let (right, left) = Self::first_pair(k);
        Ok(self.extend(right, left))
    }

    /// Radius of the maximal palindrome centered at `k` in the text with
    /// `edited` replaced by `symbol`, using LCE queries on the original text
    /// that jump over the edited position.
    pub fn max_pal_radius_skipping(&self, k: CenterIndex, edited: Pos, symbol: Symbol) -> Result<usize> {
        self.check_center(k)?;
        self.check(edited)?;
        let at = |pos: Pos| if pos == edited { symbol } else { self.symbol(pos) };
        let (mut right, mut left) = Self::first_pair(k);
        let mut radius = 0;
        // The edited position lies on one side of the center, so one jump suffices;
        // the loop bound also covers a jump at its mirror image.
        for _ in 0..3 {
            if left < self.origin || right > self.end() {
                return Ok(radius);
            }
            let run = self.extend(right, left);
            let hit = if edited >= right {
                Some(edited - right)
            } else if edited <= left {
                Some(left - edited)
            } else {
                None
            };
            match hit {
                Some(t) if t <= run => {
                    if right + t > self.end() || left < self.origin + t {
                        return Ok(radius + t);
                    }
                    if at(right + t) != at(left - t) {
                        return Ok(radius + t);
                    }
                    radius += t + 1;
                    right += t + 1;
                    left -= t + 1;
                }
                _ => return Ok(radius + run),
            }
        }
        Ok(radius)
    }

    /// Suffix-array rank range of suffixes sharing the substring at `iv`.
    fn range(&self, iv: Interval) -> (usize, usize) {
        let len = iv.len() as u32;
        let r = self.rank[self.fwd(iv.start)] as usize;
        // smallest lo with min(lcp[lo+1..=r]) >= len
        let (mut a, mut b) = (0usize, r);
        while a < b {
            let mid = (a + b) / 2;
            if self.lcp.min(mid + 1, r) >= len {
                b = mid;
            } else {
                a = mid + 1;
            }
        }
        let lo = a;
        // largest hi with min(lcp[r+1..=hi]) >= len
        let (mut a, mut b) = (r, self.sa.len() - 1);
        while a < b {
            let mid = (a + b).div_ceil(2);
            if self.lcp.min(r + 1, mid) >= len {
                a = mid;
            } else {
                b = mid - 1;
            }
        }
        (lo, a)
    }

    /// Number of occurrences of the substring at `iv` within the text.
    pub fn count(&self, iv: Interval) -> Result<usize> {
        self.check(iv.start)?;
        self.check(iv.end)?;
        let (lo, hi) = self.range(iv);
        Ok((self.forward[hi + 1] - self.forward[lo]) as usize)
    }

    /// Start positions of all occurrences of the substring at `iv`, unordered.
    pub fn occurrences(&self, iv: Interval) -> Result<Vec<Pos>> {
        self.check(iv.start)?;
        self.check(iv.end)?;
        let n = self.chars.len();
        let (lo, hi) = self.range(iv);
        Ok(self.sa[lo..=hi]
            .iter()
            .map(|&i| i as usize)
            .filter(|&i| i < n)
            .map(|i| i + self.origin)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn index(s: &str) -> LceIndex {
        LceIndex::build(&Text::from_bytes(s.as_bytes()).0).unwrap()
    }

    fn naive_fb(t: &[u8], i: usize, j: usize) -> usize {
        let mut l = 0;
        while i + l <= t.len() && j > l && t[i + l - 1] == t[j - l - 1] {
            l += 1;
        }
        l
    }

    #[test]
    fn documented_values() {
        assert_eq!(index("aab").lce_ff(1, 2).unwrap(), 1);
        assert_eq!(index("aba").lce_fb(1, 3).unwrap(), 3);
        let idx = index("abcab");
        for i in 1..=5 {
            assert_eq!(idx.lce_ff(i, i).unwrap(), 5 - i + 1);
        }
        assert_eq!(idx.lce_bb(2, 5).unwrap(), 2);
        assert!(idx.lce_ff(0, 1).is_err());
        assert!(idx.lce_ff(1, 6).is_err());
    }

    #[test]
    fn empty_text_rejected() {
        assert_eq!(LceIndex::from_symbols(&[], 1).unwrap_err(), Error::EmptyText);
    }

    #[test]
    fn radii() {
        let idx = index("aba");
        assert_eq!(idx.max_pal_radius_at(CenterIndex(3)).unwrap(), 1);
        assert_eq!(index("ab").max_pal_radius_at(CenterIndex(2)).unwrap(), 0);
        // center 6 of babbbabbababb: bbabb
        assert_eq!(index("babbbabbababb").max_pal_radius_at(CenterIndex(11)).unwrap(), 2);
    }

    #[test]
    fn skipping_examples() {
        let idx = index("aaa");
        let b = 7; // not in the alphabet of "aaa", a fresh symbol
        assert_eq!(idx.max_pal_radius_skipping(CenterIndex(3), 2, b).unwrap(), 1);
        assert_eq!(idx.max_pal_radius_skipping(CenterIndex(2), 2, b).unwrap(), 0);
        let idx = index("abcba");
        assert_eq!(idx.max_pal_radius_skipping(CenterIndex(5), 3, 9).unwrap(), 2);
    }

    #[test]
    fn windowed_origin() {
        let idx = LceIndex::from_symbols(&[0, 1, 0, 0], 10).unwrap();
        assert_eq!(idx.max_pal_radius_at(CenterIndex(21)).unwrap(), 1);
        assert_eq!(idx.count(Interval::new(10, 10).unwrap()).unwrap(), 3);
        let mut occ = idx.occurrences(Interval::new(12, 12).unwrap()).unwrap();
        occ.sort();
        assert_eq!(occ, vec![10, 12, 13]);
    }

    #[test]
    fn exhaustive_against_naive() {
        for n in 1..=7 {
            for code in 0..3usize.pow(n as u32) {
                let mut c = code;
                let t: Vec<u8> = (0..n)
                    .map(|_| {
                        let x = b"abc"[c % 3];
                        c /= 3;
                        x
                    })
                    .collect();
                let idx = LceIndex::build(&Text::from_bytes(&t).0).unwrap();
                for i in 1..=n {
                    for j in 1..=n {
                        let ff = (0..).take_while(|&l| i + l <= n && j + l <= n && t[i + l - 1] == t[j + l - 1]).count();
                        assert_eq!(idx.lce_ff(i, j).unwrap(), ff);
                        let bb = (0..).take_while(|&l| i > l && j > l && t[i - l - 1] == t[j - l - 1]).count();
                        assert_eq!(idx.lce_bb(i, j).unwrap(), bb);
                        assert_eq!(idx.lce_fb(i, j).unwrap(), naive_fb(&t, i, j));
                        if i <= j {
                            let pat = &t[i - 1..j];
                            let cnt = t.windows(pat.len()).filter(|w| *w == pat).count();
                            assert_eq!(idx.count(Interval::new(i, j).unwrap()).unwrap(), cnt);
                        }
                    }
                }
            }
        }
    }
}
