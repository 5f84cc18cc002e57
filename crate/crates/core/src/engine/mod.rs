//! SUPS query engines.
//!
//! Every engine keeps its MUPSs in three synchronized structures: the start
//! positions and the end positions in predecessor sets, and the lengths in
//! start order in a [`LogRmqArray`]. The `r`-th smallest start and the `r`-th
//! smallest end belong to the same MUPS because MUPSs never nest.

mod edit;
mod sliding;
mod static_engine;

use std::fmt;

pub use edit::EditSession;
pub use sliding::SlidingEngine;
pub use static_engine::StaticEngine;

use crate::error::{Error, Result};
use crate::logrmq::LogRmqArray;
use crate::mups::{MupsDelta, MupsRecord, MupsSet};
use crate::predsucc::OrderedPosSet;
use crate::types::{CenterIndex, Interval, Pos};

/// Widest range-minimum query issued on MUPS lengths; wider ranges are
/// split into chunks.
pub const RMQ_WIDTH: usize = 64;

/// The SUPSs of one query interval.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SupsAnswer {
    /// Sorted by start.
    pub intervals: Vec<Interval>,
    /// Length shared by all intervals, absent when there are none.
    pub common_length: Option<usize>,
}

impl SupsAnswer {
    /// Keeps the shortest of `candidates`, sorted and deduplicated.
    pub fn from_candidates(mut candidates: Vec<Interval>) -> Self {
        let Some(best) = candidates.iter().map(Interval::len).min() else {
            return SupsAnswer::default();
        };
        candidates.retain(|iv| iv.len() == best);
        candidates.sort();
        candidates.dedup();
        assert!(candidates.len() <= 4, "more than four SUPSs: {candidates:?}");
        SupsAnswer {
            intervals: candidates,
            common_length: Some(best),
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

impl fmt::Display for SupsAnswer {
    /// `k: [s1,e1] ... [sk,ek] len=L`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.intervals.len())?;
        if let Some(len) = self.common_length {
            write!(f, ":")?;
            for iv in &self.intervals {
                write!(f, " {iv}")?;
            }
            write!(f, " len={len}")?;
        }
        Ok(())
    }
}

/// MUPS starts, ends and lengths over keys `pos - offset` in `[1, universe]`.
#[derive(Clone, Debug, Hash)]
pub(crate) struct MupsKeys {
    starts: OrderedPosSet,
    ends: OrderedPosSet,
    lens: LogRmqArray,
    offset: usize,
}

impl MupsKeys {
    pub(crate) fn new(set: &MupsSet, universe: usize, offset: usize) -> Self {
        let mut keys = MupsKeys {
            starts: OrderedPosSet::new(universe),
            ends: OrderedPosSet::new(universe),
            lens: LogRmqArray::new(RMQ_WIDTH),
            offset,
        };
        let mut lens = Vec::with_capacity(set.len());
        for r in set.iter() {
            keys.starts.insert(r.iv.start - offset).expect("start inside the universe");
            keys.ends.insert(r.iv.end - offset).expect("end inside the universe");
            lens.push(r.len() as i64);
        }
        keys.lens = LogRmqArray::build(&lens, RMQ_WIDTH);
        keys
    }

    pub(crate) fn offset(&self) -> usize {
        self.offset
    }

    pub(crate) fn universe(&self) -> usize {
        self.starts.universe()
    }

    pub(crate) fn len(&self) -> usize {
        self.starts.len()
    }

    /// The `r`-th MUPS in start order, 0-based.
    pub(crate) fn record(&self, r: usize) -> Interval {
        Interval {
            start: self.starts.select(r).expect("rank in range") + self.offset,
            end: self.ends.select(r).expect("rank in range") + self.offset,
        }
    }

    fn insert(&mut self, record: &MupsRecord) -> Result<()> {
        let start = record.iv.start - self.offset;
        let r = self.starts.rank(start);
        self.starts.insert(start)?;
        self.ends.insert(record.iv.end - self.offset)?;
        self.lens.insert(r + 1, record.len() as i64)
    }

    fn remove(&mut self, record: &MupsRecord) -> Result<()> {
        let start = record.iv.start - self.offset;
        let r = self.starts.rank(start);
        self.starts.delete(start)?;
        self.ends.delete(record.iv.end - self.offset)?;
        self.lens.delete(r + 1)
    }

    /// Applies `delta` while journaling the length array for [`Self::undo`].
    pub(crate) fn apply_journaled(&mut self, delta: &MupsDelta) -> Result<()> {
        self.lens.begin_journal();
        self.apply(delta)
    }

    /// Reverts a delta applied by [`Self::apply_journaled`], bit for bit.
    pub(crate) fn undo(&mut self, delta: &MupsDelta) -> Result<()> {
        for r in &delta.added {
            self.starts.delete(r.iv.start - self.offset)?;
            self.ends.delete(r.iv.end - self.offset)?;
        }
        for r in &delta.removed {
            self.starts.insert(r.iv.start - self.offset)?;
            self.ends.insert(r.iv.end - self.offset)?;
        }
        self.lens.rollback_journal();
        Ok(())
    }

    pub(crate) fn apply(&mut self, delta: &MupsDelta) -> Result<()> {
        for r in &delta.removed {
            self.remove(r)?;
        }
        for r in &delta.added {
            self.insert(r)?;
        }
        Ok(())
    }

    fn key(&self, pos: Pos) -> usize {
        pos - self.offset
    }

    /// SUPSs of `[p, q]`, where `arm(k)` is the maximal radius at center `k`
    /// of a MUPS.
    pub(crate) fn sups(&self, p: Pos, q: Pos, arm: impl Fn(CenterIndex) -> usize) -> SupsAnswer {
        let (kp, kq) = (self.key(p), self.key(q));
        let expand = |m: Interval| {
            let k = m.center();
            let radius = k.radius_covering(p, q);
            (radius <= arm(k)).then(|| k.interval(radius).expect("radius inside the text"))
        };

        // MUPSs inside [p, q]
        if let Some(s) = self.starts.succ_eq(kp) {
            let r = self.starts.rank(s);
            let first = self.record(r);
            if first.end <= q {
                let second_inside = r + 1 < self.len() && self.record(r + 1).end <= q;
                if second_inside {
                    return SupsAnswer::default();
                }
                return SupsAnswer::from_candidates(expand(first).into_iter().collect());
            }
        }

        let mut candidates = Vec::new();
        // rightmost MUPS ending before q
        if let Some(e) = self.ends.pred(kq) {
            candidates.extend(expand(self.record(self.ends.rank(e))));
        }
        // leftmost MUPS starting after p
        if let Some(s) = self.starts.succ(kp) {
            candidates.extend(expand(self.record(self.starts.rank(s))));
        }
        // MUPSs containing [p, q]: ranks i..=j
        let i = self.ends.rank(kq);
        let j = self.starts.rank(kp + 1);
        if i < j {
            candidates.extend(self.shortest_in(i + 1, j).into_iter().map(|r| self.record(r - 1)));
        }
        SupsAnswer::from_candidates(candidates)
    }

    /// 1-based ranks of every minimum-length MUPS among ranks `lo..=hi`.
    fn shortest_in(&self, lo: usize, hi: usize) -> Vec<usize> {
        let chunks: Vec<(usize, usize)> = (lo..=hi)
            .step_by(RMQ_WIDTH)
            .map(|a| (a, (a + RMQ_WIDTH - 1).min(hi)))
            .collect();
        let min_at = |a: usize, b: usize| {
            let m = self.lens.query(a, b).expect("width within the limit");
            (self.lens.get(m).expect("index in range"), m)
        };
        let target = chunks.iter().map(|&(a, b)| min_at(a, b).0).min().expect("non-empty range");
        let mut out = Vec::new();
        let mut stack = chunks;
        while let Some((a, b)) = stack.pop() {
            if a > b {
                continue;
            }
            let (v, m) = min_at(a, b);
            if v != target {
                continue;
            }
            out.push(m);
            stack.push((a, m - 1));
            stack.push((m + 1, b));
        }
        out
    }
}

/// Rejects query intervals outside `[lo, hi]`.
pub(crate) fn check_query(p: Pos, q: Pos, lo: Pos, hi: Pos) -> Result<()> {
    if p > q || p == 0 {
        return Err(Error::InvalidInterval { start: p, end: q });
    }
    if p < lo || q > hi {
        return Err(Error::OutOfRange {
            start: p,
            end: q,
            lo,
            hi,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn answer_format() {
        let a = SupsAnswer::from_candidates(vec![
            Interval::new(4, 8).unwrap(),
            Interval::new(2, 6).unwrap(),
            Interval::new(1, 9).unwrap(),
        ]);
        assert_eq!(a.to_string(), "2: [2,6] [4,8] len=5");
        assert_eq!(SupsAnswer::default().to_string(), "0");
    }
}
