//! Maximal palindromes of a sliding window.
//!
//! [`PalArmTable`] runs Manacher's algorithm online under `push` and keeps it
//! valid under `pop` without rewriting stored arms: a stored arm may reach
//! left of the current window and is clipped on read. Only centers up to the
//! center of the longest palindromic suffix are stored; arms right of it are
//! mirror images clipped at the window end.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::types::{CenterIndex, Pos, Symbol};

#[derive(Clone, Debug, Hash)]
pub struct PalArmTable {
    chars: VecDeque<Symbol>,
    /// `arms[i]` is the stored arm of center `2 * begin - 1 + i`.
    arms: VecDeque<usize>,
    begin: Pos,
    suffix_center: Option<CenterIndex>,
}

impl Default for PalArmTable {
    fn default() -> Self {
        Self::new(1)
    }
}

impl PalArmTable {
    /// Empty window whose first pushed character lands at `begin`.
    pub fn new(begin: Pos) -> Self {
        assert!(begin >= 1, "positions are 1-based");
        PalArmTable {
            chars: VecDeque::new(),
            arms: VecDeque::new(),
            begin,
            suffix_center: None,
        }
    }

    /// Static Manacher over `chars`, positioned at `origin`.
    pub fn from_symbols(chars: &[Symbol], origin: Pos) -> Self {
        let mut table = Self::new(origin);
        for &c in chars {
            table.push(c);
        }
        table
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn begin(&self) -> Pos {
        self.begin
    }

    /// Last window position (`begin - 1` when empty).
    pub fn end(&self) -> Pos {
        self.begin + self.chars.len() - 1
    }

    pub fn symbol(&self, pos: Pos) -> Symbol {
        self.chars[pos - self.begin]
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.chars.iter().copied()
    }

    /// Center of the longest palindromic suffix of the window.
    pub fn suffix_center(&self) -> Option<CenterIndex> {
        self.suffix_center
    }

    fn base(&self) -> usize {
        2 * self.begin - 1
    }

    fn stored(&self, k: usize) -> usize {
        self.arms[k - self.base()]
    }

    fn store(&mut self, k: usize, arm: usize) {
        let i = k - self.base();
        if i < self.arms.len() {
            self.arms[i] = arm;
        } else {
            debug_assert_eq!(i, self.arms.len());
            self.arms.push_back(arm);
        }
    }

    /// Appends `c` to the window.
    pub fn push(&mut self, c: Symbol) {
        let Some(axis) = self.suffix_center else {
            self.chars.push_back(c);
            self.arms.clear();
            self.arms.push_back(0);
            self.suffix_center = Some(CenterIndex(self.base()));
            return;
        };
        let b = self.begin;
        let e = self.end();
        let mut k = axis.0;
        let mut arm = self.stored(k);
        'candidates: loop {
            // `arm` is the radius of a palindromic suffix centered at `k`.
            let len = CenterIndex(k).length_for_radius(arm);
            let start = (k + 2 - len) / 2;
            if start > b && self.symbol(start - 1) == c {
                self.store(k, arm + 1);
                self.suffix_center = Some(CenterIndex(k));
                break;
            }
            self.store(k, arm);
            k += 1;
            loop {
                if k == 2 * e {
                    arm = 0;
                    continue 'candidates;
                }
                if k == 2 * e + 1 {
                    self.store(k, 0);
                    self.suffix_center = Some(CenterIndex(k));
                    break 'candidates;
                }
                let m = 2 * axis.0 - k;
                let mirrored = self.stored(m).min(CenterIndex(m).left_slack(b));
                let reach = CenterIndex(k).right_slack(e);
                if mirrored < reach {
                    self.store(k, mirrored);
                    k += 1;
                } else {
                    arm = reach;
                    continue 'candidates;
                }
            }
        }
        self.chars.push_back(c);
    }

    /// Removes the first character of the window.
    pub fn pop(&mut self) -> Result<()> {
        let Some(axis) = self.suffix_center else {
            return Err(Error::EmptyWindow);
        };
        let b = self.begin;
        let e = self.end();
        if b == e {
            self.chars.clear();
            self.arms.clear();
            self.begin += 1;
            self.suffix_center = None;
            return Ok(());
        }
        if axis.0 == b + e - 1 {
            // The window is a palindrome: find the longest palindromic suffix
            // of the shortened window by copying mirrored arms.
            let mut k = axis.0 + 1;
            loop {
                let m = 2 * axis.0 - k;
                let reach = CenterIndex(k).right_slack(e);
                let arm = self.stored(m);
                if arm >= reach {
                    self.store(k, reach);
                    self.suffix_center = Some(CenterIndex(k));
                    break;
                }
                self.store(k, arm);
                k += 1;
            }
        }
        self.chars.pop_front();
        self.arms.pop_front();
        self.arms.pop_front();
        self.begin += 1;
        Ok(())
    }

    /// Radius of the maximal palindrome centered at `k` within the window.
    pub fn clipped_arm(&self, k: CenterIndex) -> Result<usize> {
        let Some(axis) = self.suffix_center else {
            return Err(Error::EmptyWindow);
        };
        if k.0 < self.base() || k.0 > 2 * self.end() - 1 {
            return Err(Error::OutOfRange {
                start: k.0,
                end: k.0,
                lo: self.base(),
                hi: 2 * self.end() - 1,
            });
        }
        Ok(self.arm_unchecked(k, axis))
    }

    fn arm_unchecked(&self, k: CenterIndex, axis: CenterIndex) -> usize {
        if k <= axis {
            self.stored(k.0).min(k.left_slack(self.begin))
        } else {
            let m = k.mirror(axis);
            self.stored(m.0)
                .min(m.left_slack(self.begin))
                .min(k.right_slack(self.end()))
        }
    }

    /// Clipped arms of every center in the window, left to right.
    pub fn all_arms(&self) -> Vec<usize> {
        let Some(axis) = self.suffix_center else {
            return Vec::new();
        };
        (self.base()..2 * self.end())
            .map(|k| self.arm_unchecked(CenterIndex(k), axis))
            .collect()
    }

    /// Center of the longest palindromic prefix of the window.
    pub fn prefix_center(&self) -> Option<CenterIndex> {
        self.prefix_centers().next()
    }

    /// Centers of palindromic prefixes, longest first.
    pub fn prefix_centers(&self) -> impl Iterator<Item = CenterIndex> + '_ {
        let axis = self.suffix_center;
        let hi = if self.is_empty() { 0 } else { self.begin + self.end() - 1 };
        (self.base()..=hi).rev().map(CenterIndex).filter(move |&k| {
            let axis = axis.expect("non-empty window");
            self.arm_unchecked(k, axis) >= k.left_slack(self.begin)
        })
    }

    /// Centers of palindromic suffixes, longest first.
    pub fn suffix_centers(&self) -> impl Iterator<Item = CenterIndex> + '_ {
        let lo = self.suffix_center.map_or(1, |k| k.0);
        let hi = if self.is_empty() { 0 } else { 2 * self.end() - 1 };
        (lo..=hi).map(CenterIndex).filter(move |&k| {
            let axis = self.suffix_center.expect("non-empty window");
            self.arm_unchecked(k, axis) >= k.right_slack(self.end())
        })
    }
}

/// Arms of every center of `chars` (the `2n - 1` doubled-axis centers).
pub fn manacher(chars: &[Symbol]) -> Vec<usize> {
    PalArmTable::from_symbols(chars, 1).all_arms()
}
