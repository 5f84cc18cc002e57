//! Dynamic range-minimum array for queries of bounded width.
//!
//! The array is cut into large blocks whose sizes stay within
//! `[S/2, 2S]` for the nominal size `S = w_max`, so a query of width at most
//! `w_max` touches at most three of them. A large block is cut into small
//! blocks of `L/2..=2L` elements. Each small block answers in-block queries
//! with one mask per end index: bit `i` of `masks[j]` is set when element `i`
//! is no larger than every element in `(i, j]`, so the leftmost minimum of
//! `[i, j]` is the lowest set bit of `masks[j]` at or above `i`.
//!
//! The small-block minima form level `B1`, which is cut into fixed chunks of
//! `L` with the same masks; the chunk minima form `B2`, and so on until one
//! chunk remains. A query inside a large block splits into at most two
//! small-block queries and one query on `B1`, which recurses the same way.
//!
//! Ties resolve to the leftmost minimum everywhere.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Nominal small-block size.
pub const SMALL: usize = 16;

/// `masks[j]` for every prefix of `vals`, bits relative to `vals[0]`.
fn prefix_masks(vals: &[i64], masks: &mut Vec<u32>) {
    masks.clear();
    let mut mask = 0u32;
    for (j, &v) in vals.iter().enumerate() {
        while mask != 0 {
            let top = 31 - mask.leading_zeros() as usize;
            if vals[top] > v {
                mask &= !(1 << top);
            } else {
                break;
            }
        }
        mask |= 1 << j;
        masks.push(mask);
    }
}

#[inline]
fn mask_query(masks: &[u32], i: usize, j: usize) -> usize {
    i + (masks[j] >> i).trailing_zeros() as usize
}

#[derive(Clone, Debug, Hash, PartialEq, Eq)]
struct SmallBlock {
    vals: Vec<i64>,
    masks: Vec<u32>,
}

impl SmallBlock {
    fn new(vals: Vec<i64>) -> Self {
        let mut block = SmallBlock {
            vals,
            masks: Vec::new(),
        };
        block.rebuild();
        block
    }

    fn rebuild(&mut self) -> u64 {
        prefix_masks(&self.vals, &mut self.masks);
        self.vals.len() as u64
    }

    fn len(&self) -> usize {
        self.vals.len()
    }

    fn query(&self, i: usize, j: usize) -> usize {
        mask_query(&self.masks, i, j)
    }

    fn argmin(&self) -> usize {
        self.query(0, self.len() - 1)
    }

    fn min(&self) -> i64 {
        self.vals[self.argmin()]
    }
}

/// One level of the recursive summary over small-block minima.
#[derive(Clone, Debug, Hash, PartialEq, Eq, Default)]
struct Level {
    vals: Vec<i64>,
    /// Index into `B1` of the minimum each entry stands for.
    arg: Vec<u32>,
    /// Chunk-relative masks, chunks of `SMALL` entries.
    masks: Vec<u32>,
}

impl Level {
    fn chunk_masks(&mut self, chunk: usize) -> u64 {
        let lo = chunk * SMALL;
        let hi = (lo + SMALL).min(self.vals.len());
        let mut out = Vec::with_capacity(hi - lo);
        prefix_masks(&self.vals[lo..hi], &mut out);
        self.masks[lo..hi].copy_from_slice(&out);
        (hi - lo) as u64
    }

    fn chunk_argmin(&self, chunk: usize) -> usize {
        let lo = chunk * SMALL;
        let hi = (lo + SMALL).min(self.vals.len());
        lo + mask_query(&self.masks[lo..hi], 0, hi - lo - 1)
    }

    fn chunk_query(&self, i: usize, j: usize) -> usize {
        let lo = i / SMALL * SMALL;
        let hi = (lo + SMALL).min(self.vals.len());
        lo + mask_query(&self.masks[lo..hi], i - lo, j - lo)
    }
}

/// Levels `B1, B2, ...` of a large block.
#[derive(Clone, Debug, Hash, PartialEq, Eq, Default)]
struct Summary {
    levels: Vec<Level>,
}

impl Summary {
    fn build(minima: Vec<i64>) -> (Self, u64) {
        let mut work = 0;
        let arg = (0..minima.len() as u32).collect();
        let mut levels = vec![Level {
            masks: vec![0; minima.len()],
            vals: minima,
            arg,
        }];
        loop {
            let level = levels.last_mut().unwrap();
            let chunks = level.vals.len().div_ceil(SMALL);
            for c in 0..chunks {
                work += level.chunk_masks(c);
            }
            if chunks <= 1 {
                break;
            }
            let (vals, arg) = (0..chunks)
                .map(|c| {
                    let m = level.chunk_argmin(c);
                    (level.vals[m], level.arg[m])
                })
                .unzip::<_, _, Vec<_>, Vec<_>>();
            levels.push(Level {
                masks: vec![0; vals.len()],
                vals,
                arg,
            });
        }
        (Summary { levels }, work)
    }

    /// Sets `B1[x] = v` and repairs one chunk per level.
    fn update(&mut self, x: usize, v: i64) -> u64 {
        let mut work = 0;
        self.levels[0].vals[x] = v;
        let mut i = x;
        for lv in 0..self.levels.len() {
            let chunk = i / SMALL;
            work += self.levels[lv].chunk_masks(chunk);
            if lv + 1 < self.levels.len() {
                let m = self.levels[lv].chunk_argmin(chunk);
                let (val, arg) = (self.levels[lv].vals[m], self.levels[lv].arg[m]);
                let up = &mut self.levels[lv + 1];
                up.vals[chunk] = val;
                up.arg[chunk] = arg;
            }
            i = chunk;
        }
        work
    }

    /// Leftmost minimum of `B1[l..=r]`, as a `B1` index.
    fn query(&self, lv: usize, l: usize, r: usize) -> usize {
        let level = &self.levels[lv];
        let (cl, cr) = (l / SMALL, r / SMALL);
        if cl == cr {
            return level.arg[level.chunk_query(l, r)] as usize;
        }
        let b1 = &self.levels[0].vals;
        let mut best = level.arg[level.chunk_query(l, cl * SMALL + SMALL - 1)] as usize;
        if cl + 1 < cr {
            let mid = self.query(lv + 1, cl + 1, cr - 1);
            if b1[mid] < b1[best] {
                best = mid;
            }
        }
        let right = level.arg[level.chunk_query(cr * SMALL, r)] as usize;
        if b1[right] < b1[best] {
            best = right;
        }
        best
    }

    fn depth(&self) -> usize {
        self.levels.len()
    }
}

#[derive(Clone, Debug, Hash, PartialEq, Eq)]
struct LargeBlock {
    smalls: Vec<SmallBlock>,
    /// Prefix offsets of the small blocks; `starts.len() == smalls.len() + 1`.
    starts: Vec<usize>,
    summary: Summary,
}

/// Route taken by a query through one large block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPlan {
    pub large_block: usize,
    /// Small blocks queried partially, in order (one or two).
    pub partial_small_blocks: Vec<usize>,
    /// Range of `B1` queried for the fully covered small blocks.
    pub b1_range: Option<(usize, usize)>,
}

impl LargeBlock {
    fn build(vals: &[i64]) -> (Self, u64) {
        let count = (vals.len() / SMALL).max(1);
        let mut smalls = Vec::with_capacity(count);
        let mut starts = vec![0];
        let mut work = 0;
        for c in 0..count {
            let lo = c * vals.len() / count;
            let hi = (c + 1) * vals.len() / count;
            let block = SmallBlock::new(vals[lo..hi].to_vec());
            work += block.len() as u64;
            smalls.push(block);
            starts.push(hi);
        }
        let (summary, w) = Summary::build(smalls.iter().map(SmallBlock::min).collect());
        (
            LargeBlock {
                smalls,
                starts,
                summary,
            },
            work + w,
        )
    }

    fn len(&self) -> usize {
        *self.starts.last().unwrap()
    }

    fn values(&self) -> Vec<i64> {
        self.smalls.iter().flat_map(|s| s.vals.iter().copied()).collect()
    }

    fn locate(&self, i: usize) -> (usize, usize) {
        let s = self.starts.partition_point(|&x| x <= i) - 1;
        (s, i - self.starts[s])
    }

    fn get(&self, i: usize) -> i64 {
        let (s, o) = self.locate(i);
        self.smalls[s].vals[o]
    }

    fn query(&self, l: usize, r: usize) -> usize {
        let (sa, oa) = self.locate(l);
        let (sb, ob) = self.locate(r);
        if sa == sb {
            return self.starts[sa] + self.smalls[sa].query(oa, ob);
        }
        let mut best = self.starts[sa] + self.smalls[sa].query(oa, self.smalls[sa].len() - 1);
        let mut best_val = self.get(best);
        if sa + 1 < sb {
            let s = self.summary.query(0, sa + 1, sb - 1);
            let cand = self.starts[s] + self.smalls[s].argmin();
            let v = self.get(cand);
            if v < best_val {
                best = cand;
                best_val = v;
            }
        }
        let cand = self.starts[sb] + self.smalls[sb].query(0, ob);
        if self.get(cand) < best_val {
            best = cand;
        }
        best
    }

    fn plan(&self, l: usize, r: usize) -> (Vec<usize>, Option<(usize, usize)>) {
        let (sa, _) = self.locate(l);
        let (sb, _) = self.locate(r);
        if sa == sb {
            (vec![sa], None)
        } else if sa + 1 < sb {
            (vec![sa, sb], Some((sa + 1, sb - 1)))
        } else {
            (vec![sa, sb], None)
        }
    }

    fn refresh_small(&mut self, s: usize) -> u64 {
        let w = self.smalls[s].rebuild();
        let m = self.smalls[s].min();
        w + self.summary.update(s, m)
    }

    fn rebuild_summary(&mut self) -> u64 {
        let (summary, w) = Summary::build(self.smalls.iter().map(SmallBlock::min).collect());
        self.summary = summary;
        w
    }

    fn recount(&mut self, from: usize) {
        self.starts.truncate(from + 1);
        for s in from..self.smalls.len() {
            let next = self.starts[s] + self.smalls[s].len();
            self.starts.push(next);
        }
    }

    fn substitute(&mut self, i: usize, v: i64) -> u64 {
        let (s, o) = self.locate(i);
        self.smalls[s].vals[o] = v;
        self.refresh_small(s)
    }

    fn insert(&mut self, i: usize, v: i64) -> u64 {
        let (s, o) = if i == self.len() {
            let s = self.smalls.len() - 1;
            (s, self.smalls[s].len())
        } else {
            self.locate(i)
        };
        self.smalls[s].vals.insert(o, v);
        let work = if self.smalls[s].len() > 2 * SMALL {
            let half = self.smalls[s].len() / 2;
            let tail = self.smalls[s].vals.split_off(half);
            let mut w = self.smalls[s].rebuild();
            let right = SmallBlock::new(tail);
            w += right.len() as u64;
            self.smalls.insert(s + 1, right);
            w + self.rebuild_summary()
        } else {
            self.refresh_small(s)
        };
        self.recount(s);
        work
    }

    fn delete(&mut self, i: usize) -> u64 {
        let (s, o) = self.locate(i);
        self.smalls[s].vals.remove(o);
        let work = if self.smalls[s].len() < SMALL / 2 && self.smalls.len() > 1 {
            let (a, b) = if s + 1 < self.smalls.len() { (s, s + 1) } else { (s - 1, s) };
            let right = self.smalls.remove(b);
            self.smalls[a].vals.extend(right.vals);
            let mut w = 0;
            if self.smalls[a].len() > 2 * SMALL {
                let half = self.smalls[a].len() / 2;
                let tail = self.smalls[a].vals.split_off(half);
                let block = SmallBlock::new(tail);
                w += block.len() as u64;
                self.smalls.insert(a + 1, block);
            }
            w += self.smalls[a].rebuild();
            self.recount(a);
            return w + self.rebuild_summary();
        } else if self.smalls[s].len() == 0 {
            // only small block, now empty; the caller drops the large block
            self.smalls[s].rebuild()
        } else {
            self.refresh_small(s)
        };
        self.recount(s);
        work
    }

    fn check(&self, id: usize) -> std::result::Result<(), String> {
        if self.smalls.len() > 1 {
            for (s, block) in self.smalls.iter().enumerate() {
                if block.len() < SMALL / 2 || block.len() > 2 * SMALL {
                    return Err(format!("large block {id}: small block {s} has size {}", block.len()));
                }
            }
        }
        let mut at = 0;
        for (s, block) in self.smalls.iter().enumerate() {
            if self.starts[s] != at {
                return Err(format!("large block {id}: stale offset for small block {s}"));
            }
            at += block.len();
        }
        if self.starts.last() != Some(&at) {
            return Err(format!("large block {id}: stale length"));
        }
        if self.summary.levels[0].vals.len() != self.smalls.len() {
            return Err(format!("large block {id}: summary out of sync"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct JournalEntry {
    first: usize,
    replaced: Vec<LargeBlock>,
    inserted: usize,
}

/// Dynamic integer array answering leftmost range-minimum queries of width
/// at most `w_max` in constant time.
#[derive(Clone, Debug)]
pub struct LogRmqArray {
    blocks: Vec<LargeBlock>,
    /// Prefix offsets of the large blocks; `offsets.len() == blocks.len() + 1`.
    offsets: Vec<usize>,
    w_max: usize,
    nominal: usize,
    work: u64,
    journal: Option<Vec<JournalEntry>>,
}

impl LogRmqArray {
    /// Empty array answering queries of width at most `w_max` (`>= 1`).
    pub fn new(w_max: usize) -> Self {
        assert!(w_max >= 1, "w_max must be positive");
        LogRmqArray {
            blocks: Vec::new(),
            offsets: vec![0],
            w_max,
            nominal: w_max.max(2),
            work: 0,
            journal: None,
        }
    }

    pub fn build(values: &[i64], w_max: usize) -> Self {
        let mut a = Self::new(w_max);
        let s = a.nominal;
        let count = values.len().div_ceil(s);
        for c in 0..count {
            let lo = c * values.len() / count;
            let hi = (c + 1) * values.len() / count;
            let (block, w) = LargeBlock::build(&values[lo..hi]);
            a.work += w;
            a.blocks.push(block);
            a.offsets.push(hi);
        }
        a
    }

    pub fn len(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn w_max(&self) -> usize {
        self.w_max
    }

    /// Elements written by block rebuilds so far.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// Levels of the deepest block summary.
    pub fn depth(&self) -> usize {
        self.blocks.iter().map(|b| b.summary.depth()).max().unwrap_or(0)
    }

    pub fn to_vec(&self) -> Vec<i64> {
        self.blocks.iter().flat_map(LargeBlock::values).collect()
    }

    fn locate(&self, i: usize) -> (usize, usize) {
        let b = self.offsets.partition_point(|&x| x <= i) - 1;
        (b, i - self.offsets[b])
    }

    /// Converts a 1-based index to a 0-based one.
    fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfBounds {
                index: i,
                len: self.len(),
            });
        }
        Ok(i - 1)
    }

    pub fn get(&self, i: usize) -> Result<i64> {
        let i = self.check_index(i)?;
        let (b, o) = self.locate(i);
        Ok(self.blocks[b].get(o))
    }

    fn check_range(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        if i > j || i == 0 {
            return Err(Error::InvalidInterval { start: i, end: j });
        }
        let j = self.check_index(j)?;
        if j + 1 - i + 1 > self.w_max {
            return Err(Error::WidthExceeded {
                width: j + 2 - i,
                max: self.w_max,
            });
        }
        Ok((i - 1, j))
    }

    /// Index of the leftmost minimum of `A[i..=j]`, 1-based and inclusive.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        let (i, j) = self.check_range(i, j)?;
        let (mut b, mut lo) = self.locate(i);
        let mut best: Option<(i64, usize)> = None;
        loop {
            let start = self.offsets[b];
            let hi = (j - start).min(self.blocks[b].len() - 1);
            let local = self.blocks[b].query(lo, hi);
            let v = self.blocks[b].get(local);
            if best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, start + local));
            }
            if self.offsets[b + 1] > j {
                break;
            }
            b += 1;
            lo = 0;
        }
        Ok(best.unwrap().1 + 1)
    }

    /// The decomposition `query(i, j)` follows, one entry per large block.
    /// Block numbers and `B1` ranges are 1-based.
    pub fn plan(&self, i: usize, j: usize) -> Result<Vec<BlockPlan>> {
        let (i, j) = self.check_range(i, j)?;
        let (mut b, mut lo) = self.locate(i);
        let mut out = Vec::new();
        loop {
            let start = self.offsets[b];
            let hi = (j - start).min(self.blocks[b].len() - 1);
            let (partial_small_blocks, b1_range) = self.blocks[b].plan(lo, hi);
            out.push(BlockPlan {
                large_block: b + 1,
                partial_small_blocks: partial_small_blocks.iter().map(|s| s + 1).collect(),
                b1_range: b1_range.map(|(l, r)| (l + 1, r + 1)),
            });
            if self.offsets[b + 1] > j {
                break;
            }
            b += 1;
            lo = 0;
        }
        Ok(out)
    }

    fn recount(&mut self, from: usize) {
        self.offsets.truncate(from + 1);
        for b in from..self.blocks.len() {
            let next = self.offsets[b] + self.blocks[b].len();
            self.offsets.push(next);
        }
    }

    /// Runs `f` over blocks `lo..hi`, journaling their previous contents.
    fn journaled(&mut self, lo: usize, hi: usize, f: impl FnOnce(&mut Self)) {
        let before = self.blocks.len();
        let snapshot = self.journal.is_some().then(|| self.blocks[lo..hi].to_vec());
        f(self);
        if let (Some(journal), Some(replaced)) = (self.journal.as_mut(), snapshot) {
            let inserted = (hi - lo + self.blocks.len()) - before;
            journal.push(JournalEntry {
                first: lo,
                replaced,
                inserted,
            });
        }
    }

    pub fn substitute(&mut self, i: usize, v: i64) -> Result<()> {
        let i = self.check_index(i)?;
        let (b, o) = self.locate(i);
        self.journaled(b, b + 1, |a| a.work += a.blocks[b].substitute(o, v));
        Ok(())
    }

    /// Inserts `v` so that it ends up at index `i` (`1 <= i <= len + 1`).
    pub fn insert(&mut self, i: usize, v: i64) -> Result<()> {
        if i == 0 || i > self.len() + 1 {
            return Err(Error::IndexOutOfBounds {
                index: i,
                len: self.len(),
            });
        }
        let i = i - 1;
        if self.blocks.is_empty() {
            self.journaled(0, 0, |a| {
                let (block, w) = LargeBlock::build(&[v]);
                a.work += w;
                a.blocks.push(block);
                a.recount(0);
            });
            return Ok(());
        }
        let (b, o) = if i == self.len() {
            let b = self.blocks.len() - 1;
            (b, self.blocks[b].len())
        } else {
            self.locate(i)
        };
        self.journaled(b, b + 1, |a| {
            a.work += a.blocks[b].insert(o, v);
            if a.blocks[b].len() > 2 * a.nominal {
                let vals = a.blocks[b].values();
                let mid = vals.len() / 2;
                let (left, w1) = LargeBlock::build(&vals[..mid]);
                let (right, w2) = LargeBlock::build(&vals[mid..]);
                a.work += w1 + w2;
                a.blocks[b] = left;
                a.blocks.insert(b + 1, right);
            }
            a.recount(b);
        });
        Ok(())
    }

    pub fn delete(&mut self, i: usize) -> Result<()> {
        let i = self.check_index(i)?;
        let (b, o) = self.locate(i);
        let lo = b.saturating_sub(1);
        let hi = (b + 2).min(self.blocks.len());
        self.journaled(lo, hi, |a| {
            a.work += a.blocks[b].delete(o);
            let len = a.blocks[b].len();
            if len == 0 {
                a.blocks.remove(b);
                a.recount(b.min(a.blocks.len()));
            } else if len < a.nominal / 2 && a.blocks.len() > 1 {
                let (x, y) = if b + 1 < a.blocks.len() { (b, b + 1) } else { (b - 1, b) };
                let mut vals = a.blocks[x].values();
                vals.extend(a.blocks[y].values());
                a.blocks.remove(y);
                if vals.len() > 2 * a.nominal {
                    let mid = vals.len() / 2;
                    let (left, w1) = LargeBlock::build(&vals[..mid]);
                    let (right, w2) = LargeBlock::build(&vals[mid..]);
                    a.work += w1 + w2;
                    a.blocks[x] = left;
                    a.blocks.insert(x + 1, right);
                } else {
                    let (block, w) = LargeBlock::build(&vals);
                    a.work += w;
                    a.blocks[x] = block;
                }
                a.recount(x);
            } else {
                a.recount(b);
            }
        });
        Ok(())
    }

    /// Starts recording undo information for every mutation.
    pub fn begin_journal(&mut self) {
        self.journal = Some(Vec::new());
    }

    /// Stops recording and keeps the current contents.
    pub fn commit_journal(&mut self) {
        self.journal = None;
    }

    /// Undoes every mutation since [`begin_journal`](Self::begin_journal),
    /// restoring the exact block layout.
    pub fn rollback_journal(&mut self) {
        let Some(journal) = self.journal.take() else {
            return;
        };
        let mut lowest = self.blocks.len();
        for entry in journal.into_iter().rev() {
            self.blocks
                .splice(entry.first..entry.first + entry.inserted, entry.replaced);
            lowest = lowest.min(entry.first);
        }
        self.recount(lowest.min(self.blocks.len()));
    }

    /// Verifies the block-size invariants and internal bookkeeping.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let s = self.nominal;
        if self.blocks.len() > 1 {
            for (id, block) in self.blocks.iter().enumerate() {
                if block.len() < s / 2 || block.len() > 2 * s {
                    return Err(format!("large block {id} has size {} outside [{}, {}]", block.len(), s / 2, 2 * s));
                }
            }
        } else if let Some(block) = self.blocks.first() {
            if block.len() == 0 || block.len() > 2 * s {
                return Err(format!("single large block has size {}", block.len()));
            }
        }
        let mut at = 0;
        for (id, block) in self.blocks.iter().enumerate() {
            if self.offsets[id] != at {
                return Err(format!("stale offset for large block {id}"));
            }
            block.check(id)?;
            at += block.len();
        }
        if self.offsets.len() != self.blocks.len() + 1 || self.len() != at {
            return Err("stale length".into());
        }
        Ok(())
    }

    /// Hash of the complete internal layout.
    pub fn digest(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.hash(&mut h);
        h.finish()
    }
}

/// Hashes the layout, leaving out the work counter and any open journal.
impl Hash for LogRmqArray {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.blocks.hash(state);
        self.offsets.hash(state);
        self.w_max.hash(state);
    }
}
