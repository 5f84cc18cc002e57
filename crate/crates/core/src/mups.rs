//! Minimal unique palindromic substrings (MUPSs).
//!
//! At a fixed center, every occurrence of a longer palindrome contains an
//! occurrence of each shorter one, so uniqueness is monotone in the radius.
//! The shortest unique palindrome at a center is therefore the only MUPS
//! there, and a binary search over the radius finds it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::maxpal::{manacher, PalArmTable};
use crate::types::{CenterIndex, Interval, Pos, Symbol, Text};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MupsRecord {
    pub iv: Interval,
    pub center: CenterIndex,
}

impl MupsRecord {
    pub fn new(iv: Interval) -> Self {
        MupsRecord {
            iv,
            center: iv.center(),
        }
    }

    pub fn len(&self) -> usize {
        self.iv.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Changes turning one MUPS set into another.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MupsDelta {
    /// Sorted by start.
    pub removed: Vec<MupsRecord>,
    /// Sorted by start.
    pub added: Vec<MupsRecord>,
}

impl MupsDelta {
    pub fn len(&self) -> usize {
        self.removed.len() + self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The delta undoing this one.
    pub fn inverse(&self) -> MupsDelta {
        MupsDelta {
            removed: self.added.clone(),
            added: self.removed.clone(),
        }
    }
}

/// The MUPSs of a text, ordered by start. Since MUPSs never nest, this is
/// also the order by end.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MupsSet {
    by_start: BTreeMap<Pos, MupsRecord>,
    by_center: BTreeMap<usize, Pos>,
}

impl MupsSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.by_start.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_start.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MupsRecord> + '_ {
        self.by_start.values()
    }

    pub fn intervals(&self) -> Vec<Interval> {
        self.iter().map(|r| r.iv).collect()
    }

    pub fn starting_at(&self, start: Pos) -> Option<&MupsRecord> {
        self.by_start.get(&start)
    }

    pub fn at_center(&self, k: CenterIndex) -> Option<&MupsRecord> {
        self.by_center.get(&k.0).map(|s| &self.by_start[s])
    }

    pub fn contains(&self, record: &MupsRecord) -> bool {
        self.by_start.get(&record.iv.start) == Some(record)
    }

    /// Adds `record`, which must not share a start or center with a member.
    pub fn insert(&mut self, record: MupsRecord) {
        let clash = self.by_start.insert(record.iv.start, record);
        assert!(clash.is_none(), "two MUPSs start at {}", record.iv.start);
        let clash = self.by_center.insert(record.center.0, record.iv.start);
        assert!(clash.is_none(), "two MUPSs centered at {}", record.center);
    }

    pub fn remove(&mut self, record: &MupsRecord) -> Result<()> {
        if !self.contains(record) {
            return Err(Error::NotMember(record.iv.start));
        }
        self.by_start.remove(&record.iv.start);
        self.by_center.remove(&record.center.0);
        Ok(())
    }

    pub fn apply(&mut self, delta: &MupsDelta) -> Result<()> {
        for r in &delta.removed {
            self.remove(r)?;
        }
        for r in &delta.added {
            self.insert(*r);
        }
        Ok(())
    }

    /// The delta turning `self` into `other`.
    pub fn diff(&self, other: &MupsSet) -> MupsDelta {
        MupsDelta {
            removed: self.iter().filter(|r| !other.contains(r)).copied().collect(),
            added: other.iter().filter(|r| !self.contains(r)).copied().collect(),
        }
    }

    /// Whether starts and ends increase together.
    pub fn is_non_nested(&self) -> bool {
        self.iter()
            .zip(self.iter().skip(1))
            .all(|(a, b)| a.iv.start < b.iv.start && a.iv.end < b.iv.end)
    }
}

/// Shortest palindrome at `k` with radius at most `arm` for which `count`
/// reports a single occurrence.
pub fn shortest_unique_at(
    k: CenterIndex,
    arm: usize,
    mut count: impl FnMut(Interval) -> usize,
) -> Option<Interval> {
    let lo = k.min_radius();
    if arm < lo {
        return None;
    }
    let iv = |r: usize| k.interval(r).expect("radius within the text");
    if count(iv(arm)) > 1 {
        return None;
    }
    let (mut a, mut b) = (lo, arm);
    while a < b {
        let mid = (a + b) / 2;
        if count(iv(mid)) == 1 {
            b = mid;
        } else {
            a = mid + 1;
        }
    }
    Some(iv(a))
}

fn mups_at(k: CenterIndex, arms: &PalArmTable, lce: &LceIndex) -> Option<MupsRecord> {
    if k.0 + 1 < 2 * arms.begin() || k.0 + 1 > 2 * arms.end() {
        return None;
    }
    let arm = arms.clipped_arm(k).ok()?;
    shortest_unique_at(k, arm, |iv| lce.count(iv).expect("interval in window")).map(MupsRecord::new)
}

/// All MUPSs of `text`, given its index and arm table.
pub fn compute_static(text: &Text, lce: &LceIndex, arms: &PalArmTable) -> MupsSet {
    let mut set = MupsSet::new();
    if text.is_empty() {
        return set;
    }
    for k in 2 * text.origin() - 1..2 * text.end() {
        if let Some(r) = mups_at(CenterIndex(k), arms, lce) {
            set.insert(r);
        }
    }
    set
}

/// All MUPSs of `text`, building the helper structures.
pub fn mups_of(text: &Text) -> MupsSet {
    if text.is_empty() {
        return MupsSet::new();
    }
    let lce = LceIndex::build(text).expect("non-empty text");
    let arms = PalArmTable::from_symbols(text.chars(), text.origin());
    compute_static(text, &lce, &arms)
}

/// MUPS changes caused by replacing `pos` with `c`. `current` is the MUPS
/// set of `text`; neither is modified.
pub fn substitution_delta(text: &Text, current: &MupsSet, pos: Pos, c: Symbol) -> Result<MupsDelta> {
    text.check(Interval { start: pos, end: pos })?;
    if text.at(pos) == c {
        return Ok(MupsDelta::default());
    }
    let edited = text.substituted(pos, c)?;
    let lce = LceIndex::build(&edited)?;
    let arms = manacher(edited.chars());
    let mut next = MupsSet::new();
    let base = 2 * edited.origin() - 1;
    for (i, &arm) in arms.iter().enumerate() {
        let k = CenterIndex(base + i);
        if let Some(iv) = shortest_unique_at(k, arm, |iv| lce.count(iv).expect("interval in text")) {
            next.insert(MupsRecord::new(iv));
        }
    }
    Ok(current.diff(&next))
}

/// MUPSs of a sliding window, maintained under `push` and `pop`.
#[derive(Clone, Debug)]
pub struct SlidingMups {
    arms: PalArmTable,
    index: Option<LceIndex>,
    set: MupsSet,
}

impl Default for SlidingMups {
    fn default() -> Self {
        Self::new()
    }
}

impl SlidingMups {
    pub fn new() -> Self {
        SlidingMups {
            arms: PalArmTable::new(1),
            index: None,
            set: MupsSet::new(),
        }
    }

    pub fn arms(&self) -> &PalArmTable {
        &self.arms
    }

    pub fn set(&self) -> &MupsSet {
        &self.set
    }

    /// Index over the current window, absent when it is empty.
    pub fn index(&self) -> Option<&LceIndex> {
        self.index.as_ref()
    }

    pub fn begin(&self) -> Pos {
        self.arms.begin()
    }

    pub fn end(&self) -> Pos {
        self.arms.end()
    }

    pub fn len(&self) -> usize {
        self.arms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arms.is_empty()
    }

    pub fn text(&self) -> Text {
        Text::with_origin(self.arms.symbols().collect(), self.arms.begin())
    }

    fn reindex(&mut self) {
        self.index = if self.arms.is_empty() {
            None
        } else {
            let chars: Vec<Symbol> = self.arms.symbols().collect();
            Some(LceIndex::from_symbols(&chars, self.arms.begin()).expect("non-empty window"))
        };
    }

    /// Center of the occurrence of `iv` other than `iv` itself, if `iv`
    /// occurs exactly twice.
    fn partner(index: &LceIndex, iv: Interval) -> Option<CenterIndex> {
        if index.count(iv).ok()? != 2 {
            return None;
        }
        let start = index.occurrences(iv).ok()?.into_iter().find(|&s| s != iv.start)?;
        Some(Interval::new(start, start + iv.len() - 1).ok()?.center())
    }

    fn palindrome_at(k: CenterIndex, arms: &PalArmTable) -> Option<Interval> {
        k.interval(arms.clipped_arm(k).ok()?)
    }

    /// Recomputes the MUPS at each candidate center and applies the changes.
    fn settle(&mut self, candidates: Vec<CenterIndex>) -> MupsDelta {
        let mut removed = Vec::new();
        let mut added = Vec::new();
        let mut seen = Vec::new();
        for k in candidates {
            if seen.contains(&k) {
                continue;
            }
            seen.push(k);
            let old = self.set.at_center(k).copied();
            let new = self.index.as_ref().and_then(|lce| mups_at(k, &self.arms, lce));
            if old != new {
                removed.extend(old);
                added.extend(new);
            }
        }
        // a MUPS whose center falls out of the window
        if let Some(first) = self.set.iter().next() {
            if first.iv.start < self.arms.begin() && !removed.contains(first) {
                removed.push(*first);
            }
        }
        removed.sort();
        added.sort();
        let delta = MupsDelta { removed, added };
        self.set.apply(&delta).expect("removed records are members");
        delta
    }

    /// Appends `c` and returns the resulting MUPS changes.
    pub fn pushback_delta(&mut self, c: Symbol) -> MupsDelta {
        let old_suffix = self.arms.suffix_center();
        self.arms.push(c);
        self.reindex();
        let index = self.index.as_ref().expect("non-empty window");
        let mut candidates: Vec<CenterIndex> = old_suffix.into_iter().collect();
        for k in self.arms.suffix_centers().take(2) {
            candidates.push(k);
            if let Some(iv) = Self::palindrome_at(k, &self.arms) {
                candidates.extend(Self::partner(index, iv));
            }
        }
        self.settle(candidates)
    }

    /// Removes the first character and returns the resulting MUPS changes.
    pub fn pop_delta(&mut self) -> Result<MupsDelta> {
        let index = self.index.as_ref().ok_or(Error::EmptyWindow)?;
        let mut candidates = Vec::new();
        for k in self.arms.prefix_centers().take(2) {
            candidates.push(k);
            if let Some(iv) = Self::palindrome_at(k, &self.arms) {
                candidates.extend(Self::partner(index, iv));
            }
        }
        self.arms.pop()?;
        self.reindex();
        Ok(self.settle(candidates))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(s: &str) -> Text {
        Text::new(s.bytes().map(|b| (b - b'a') as Symbol).collect())
    }

    fn ivs(v: &[(usize, usize)]) -> Vec<Interval> {
        v.iter().map(|&(a, b)| Interval::new(a, b).unwrap()).collect()
    }

    #[test]
    fn static_examples() {
        assert_eq!(mups_of(&text("babbbabbababb")).intervals(), ivs(&[(3, 5), (4, 8), (6, 9), (9, 11)]));
        assert_eq!(mups_of(&text("aa")).intervals(), ivs(&[(1, 2)]));
        assert_eq!(mups_of(&text("ab")).intervals(), ivs(&[(1, 1), (2, 2)]));
        assert_eq!(mups_of(&text("abaaba")).intervals(), ivs(&[(3, 4)]));
        assert_eq!(mups_of(&text("a")).intervals(), ivs(&[(1, 1)]));
    }

    #[test]
    fn substitution_examples() {
        let t = text("aaa");
        let set = mups_of(&t);
        let d = substitution_delta(&t, &set, 2, 1).unwrap();
        assert_eq!(d.removed, vec![MupsRecord::new(Interval::new(1, 3).unwrap())]);
        assert_eq!(d.added, vec![MupsRecord::new(Interval::new(2, 2).unwrap())]);
        assert!(substitution_delta(&t, &set, 2, 0).unwrap().is_empty());
    }

    #[test]
    fn push_examples() {
        let mut s = SlidingMups::new();
        s.pushback_delta(0);
        let d = s.pushback_delta(1);
        assert_eq!(d.added, vec![MupsRecord::new(Interval::new(2, 2).unwrap())]);
        assert!(d.removed.is_empty());
        let d = s.pushback_delta(0);
        assert_eq!(d.removed, vec![MupsRecord::new(Interval::new(1, 1).unwrap())]);
        assert!(d.added.is_empty());
        assert_eq!(s.set().intervals(), ivs(&[(2, 2)]));
    }

    #[test]
    fn pop_on_empty_fails() {
        let mut s = SlidingMups::new();
        assert_eq!(s.pop_delta().unwrap_err(), Error::EmptyWindow);
    }

    #[test]
    fn exhaustive_short_streams() {
        fn walk(s: &SlidingMups, depth: usize) {
            if depth == 0 {
                return;
            }
            for op in 0..3 {
                let mut next = s.clone();
                if op == 2 {
                    if next.is_empty() {
                        continue;
                    }
                    next.pop_delta().unwrap();
                } else {
                    next.pushback_delta(op);
                }
                assert_eq!(next.set(), &mups_of(&next.text()), "window {:?}", next.text());
                walk(&next, depth - 1);
            }
        }
        walk(&SlidingMups::new(), 8);
    }
}
