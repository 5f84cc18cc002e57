use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{check_query, MupsKeys, SupsAnswer};
use crate::error::{Error, Result};
use crate::mups::{MupsDelta, MupsSet, SlidingMups};
use crate::types::{Pos, Symbol, Text};

/// SUPS queries over a sliding window of at most `capacity` characters.
///
/// Positions are absolute. The MUPS keys cover a range of `2 * capacity`
/// positions; once the window runs past it, the keys are rebuilt starting
/// at the window begin.
#[derive(Clone, Debug)]
pub struct SlidingEngine {
    capacity: usize,
    mups: SlidingMups,
    keys: MupsKeys,
}

impl SlidingEngine {
    pub fn new(capacity: usize) -> Self {
        assert!(capacity >= 1, "capacity must be positive");
        SlidingEngine {
            capacity,
            mups: SlidingMups::new(),
            keys: MupsKeys::new(&MupsSet::new(), 2 * capacity, 0),
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn begin(&self) -> Pos {
        self.mups.begin()
    }

    pub fn end(&self) -> Pos {
        self.mups.end()
    }

    pub fn len(&self) -> usize {
        self.mups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mups.is_empty()
    }

    pub fn window(&self) -> Text {
        self.mups.text()
    }

    pub fn mups(&self) -> &MupsSet {
        self.mups.set()
    }

    pub fn clipped_arms(&self) -> Vec<usize> {
        self.mups.arms().all_arms()
    }

    fn sync(&mut self, delta: &MupsDelta) {
        if self.end() > self.keys.offset() + self.keys.universe() {
            self.keys = MupsKeys::new(self.mups.set(), 2 * self.capacity, self.begin() - 1);
        } else {
            self.keys.apply(delta).expect("keys mirror the MUPS set");
        }
    }

    pub fn push(&mut self, c: Symbol) -> Result<MupsDelta> {
        if self.len() == self.capacity {
            return Err(Error::CapacityExceeded {
                capacity: self.capacity,
            });
        }
        let delta = self.mups.pushback_delta(c);
        self.sync(&delta);
        Ok(delta)
    }

    pub fn pop(&mut self) -> Result<MupsDelta> {
        let delta = self.mups.pop_delta()?;
        self.sync(&delta);
        Ok(delta)
    }

    pub fn sups(&self, p: Pos, q: Pos) -> Result<SupsAnswer> {
        if self.is_empty() {
            return Err(Error::EmptyWindow);
        }
        check_query(p, q, self.begin(), self.end())?;
        let arms = self.mups.arms();
        Ok(self.keys.sups(p, q, |k| arms.clipped_arm(k).expect("MUPS center in the window")))
    }

    pub fn digest(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.mups.arms().hash(&mut h);
        self.mups.set().hash(&mut h);
        self.keys.hash(&mut h);
        h.finish()
    }
}
