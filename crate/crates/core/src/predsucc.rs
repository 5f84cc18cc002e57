//! Dynamic integer set over a fixed universe with predecessor/successor.
//!
//! A 64-ary bitset hierarchy: level 0 holds one bit per element, each higher
//! level one bit per non-empty word below it, up to a single top word. Every
//! query walks at most `ceil(log64 U)` levels. A Fenwick tree over level-0
//! word popcounts adds rank and select.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedPosSet {
    universe: usize,
    levels: Vec<Vec<u64>>,
    fenwick: Vec<u32>,
    len: usize,
}

impl OrderedPosSet {
    /// Empty set over `[1, universe]`.
    pub fn new(universe: usize) -> Self {
        let mut levels = Vec::new();
        let mut bits = universe.max(1);
        loop {
            let words = bits.div_ceil(64);
            levels.push(vec![0u64; words]);
            if words == 1 {
                break;
            }
            bits = words;
        }
        let words = levels[0].len();
        OrderedPosSet {
            universe,
            levels,
            fenwick: vec![0; words + 1],
            len: 0,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn check(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.universe {
            return Err(Error::OutsideUniverse {
                value: x,
                universe: self.universe,
            });
        }
        Ok(x - 1)
    }

    pub fn contains(&self, x: usize) -> bool {
        match self.check(x) {
            Ok(i) => self.levels[0][i / 64] >> (i % 64) & 1 == 1,
            Err(_) => false,
        }
    }

    fn fenwick_add(&mut self, word: usize, delta: i32) {
        let mut i = word + 1;
        while i < self.fenwick.len() {
            self.fenwick[i] = (self.fenwick[i] as i32 + delta) as u32;
            i += i & i.wrapping_neg();
        }
    }

    /// Inserts `x`; returns `false` if it was already present.
    pub fn insert(&mut self, x: usize) -> Result<bool> {
        let mut i = self.check(x)?;
        if self.contains(x) {
            return Ok(false);
        }
        self.fenwick_add(i / 64, 1);
        for level in &mut self.levels {
            let was_empty = level[i / 64] == 0;
            level[i / 64] |= 1 << (i % 64);
            if !was_empty {
                break;
            }
            i /= 64;
        }
        self.len += 1;
        Ok(true)
    }

    /// Removes `x`, which must be present.
    pub fn delete(&mut self, x: usize) -> Result<()> {
        let mut i = self.check(x)?;
        if !self.contains(x) {
            return Err(Error::NotMember(x));
        }
        self.fenwick_add(i / 64, -1);
        for level in &mut self.levels {
            level[i / 64] &= !(1 << (i % 64));
            if level[i / 64] != 0 {
                break;
            }
            i /= 64;
        }
        self.len -= 1;
        Ok(())
    }

    /// Largest set bit index `< i` on `level`.
    fn prev_below(&self, level: usize, i: usize) -> Option<usize> {
        let words = &self.levels[level];
        let (w, mask) = if i >= words.len() * 64 {
            (words.len() - 1, !0u64)
        } else {
            (i / 64, (1u64 << (i % 64)) - 1)
        };
        let word = words[w] & mask;
        if word != 0 {
            return Some(w * 64 + 63 - word.leading_zeros() as usize);
        }
        if w == 0 || level + 1 == self.levels.len() {
            return None;
        }
        let pw = self.prev_below(level + 1, w)?;
        Some(pw * 64 + 63 - words[pw].leading_zeros() as usize)
    }

    /// Smallest set bit index `>= i` on `level`.
    fn next_from(&self, level: usize, i: usize) -> Option<usize> {
        let words = &self.levels[level];
        let (w, b) = (i / 64, i % 64);
        if w >= words.len() {
            return None;
        }
        let word = words[w] & (!0u64 << b);
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
        if level + 1 == self.levels.len() {
            return None;
        }
        let nw = self.next_from(level + 1, w + 1)?;
        Some(nw * 64 + words[nw].trailing_zeros() as usize)
    }

    /// Largest element `< x`.
    pub fn pred(&self, x: usize) -> Option<usize> {
        if x <= 1 {
            return None;
        }
        self.prev_below(0, (x - 1).min(self.universe)).map(|i| i + 1)
    }

    /// Largest element `<= x`.
    pub fn pred_eq(&self, x: usize) -> Option<usize> {
        self.pred(x.saturating_add(1))
    }

    /// Smallest element `> x`.
    pub fn succ(&self, x: usize) -> Option<usize> {
        if x >= self.universe {
            return None;
        }
        self.next_from(0, x).map(|i| i + 1)
    }

    /// Smallest element `>= x`.
    pub fn succ_eq(&self, x: usize) -> Option<usize> {
        self.succ(x.saturating_sub(1))
    }

    pub fn min(&self) -> Option<usize> {
        self.succ(0)
    }

    pub fn max(&self) -> Option<usize> {
        self.pred(self.universe + 1)
    }

    /// Number of elements `< x`.
    pub fn rank(&self, x: usize) -> usize {
        if x <= 1 {
            return 0;
        }
        let i = (x - 1).min(self.universe);
        let (w, b) = (i / 64, i % 64);
        let mut count = 0u32;
        let mut j = w;
        while j > 0 {
            count += self.fenwick[j];
            j &= j - 1;
        }
        if w < self.levels[0].len() {
            count += (self.levels[0][w] & ((1u64 << b) - 1)).count_ones();
        }
        count as usize
    }

    /// The `r`-th smallest element, 0-based.
    pub fn select(&self, r: usize) -> Option<usize> {
        if r >= self.len {
            return None;
        }
        let mut rest = r as u32;
        let mut pos = 0;
        let mut step = (self.fenwick.len() - 1).next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next < self.fenwick.len() && self.fenwick[next] <= rest {
                rest -= self.fenwick[next];
                pos = next;
            }
            step /= 2;
        }
        let mut word = self.levels[0][pos];
        for _ in 0..rest {
            word &= word - 1;
        }
        Some(pos * 64 + word.trailing_zeros() as usize + 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(self.min(), move |&x| self.succ(x))
    }

    pub fn clear(&mut self) {
        for level in &mut self.levels {
            level.fill(0);
        }
        self.fenwick.fill(0);
        self.len = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_pred_succ() {
        let mut s = OrderedPosSet::new(20);
        s.insert(5).unwrap();
        s.insert(9).unwrap();
        assert_eq!(s.pred(9), Some(5));
        assert_eq!(s.pred_eq(9), Some(9));
        assert_eq!(s.succ(5), Some(9));
        assert_eq!(s.succ_eq(5), Some(5));
        s.delete(5).unwrap();
        assert_eq!(s.pred(9), None);
        assert_eq!(s.delete(5).unwrap_err(), Error::NotMember(5));
        assert!(s.insert(0).is_err());
        assert!(s.insert(21).is_err());
        assert_eq!(s.succ(20), None);
        assert_eq!(s.pred(1), None);
    }

    #[test]
    fn rank_select_across_words() {
        let mut s = OrderedPosSet::new(10_000);
        let xs = [1, 64, 65, 128, 129, 4095, 4096, 4097, 9999, 10_000];
        for &x in &xs {
            s.insert(x).unwrap();
        }
        for (r, &x) in xs.iter().enumerate() {
            assert_eq!(s.rank(x), r);
            assert_eq!(s.select(r), Some(x));
            assert_eq!(s.pred(x), if r == 0 { None } else { Some(xs[r - 1]) });
            assert_eq!(s.succ(x), xs.get(r + 1).copied());
        }
        assert_eq!(s.select(xs.len()), None);
        assert_eq!(s.iter().collect::<Vec<_>>(), xs);
        assert_eq!(s.max(), Some(10_000));
    }
}
