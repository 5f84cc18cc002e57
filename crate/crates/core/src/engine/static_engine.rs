use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::{check_query, EditSession, MupsKeys, SupsAnswer};
use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::maxpal::PalArmTable;
use crate::mups::{compute_static, MupsSet};
use crate::types::{CenterIndex, Pos, Symbol, Text};

/// SUPS queries over a fixed text.
#[derive(Clone, Debug)]
pub struct StaticEngine {
    pub(super) text: Text,
    pub(super) lce: LceIndex,
    pub(super) arms: Vec<usize>,
    pub(super) mups: MupsSet,
    pub(super) keys: MupsKeys,
}

impl StaticEngine {
    pub fn preprocess(text: Text) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::EmptyText);
        }
        let lce = LceIndex::build(&text)?;
        let table = PalArmTable::from_symbols(text.chars(), text.origin());
        let mups = compute_static(&text, &lce, &table);
        let keys = MupsKeys::new(&mups, text.end(), text.origin() - 1);
        Ok(StaticEngine {
            arms: table.all_arms(),
            text,
            lce,
            mups,
            keys,
        })
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn mups(&self) -> &MupsSet {
        &self.mups
    }

    pub(super) fn arm(&self, k: CenterIndex) -> usize {
        self.arms[k.0 + 1 - 2 * self.text.origin()]
    }

    pub fn sups(&self, p: Pos, q: Pos) -> Result<SupsAnswer> {
        check_query(p, q, self.text.origin(), self.text.end())?;
        Ok(self.keys.sups(p, q, |k| self.arm(k)))
    }

    /// Opens a session answering queries on the text with `pos` set to `c`.
    pub fn begin_substitution(&mut self, pos: Pos, c: Symbol) -> Result<EditSession<'_>> {
        EditSession::open(self, pos, c)
    }

    /// Hash of the text and every MUPS-keyed structure.
    pub fn digest(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.text.hash(&mut h);
        self.arms.hash(&mut h);
        self.mups.hash(&mut h);
        self.keys.hash(&mut h);
        h.finish()
    }
}
