use super::{check_query, StaticEngine, SupsAnswer};
use crate::error::Result;
use crate::mups::{substitution_delta, MupsDelta};
use crate::types::{CenterIndex, Pos, Symbol};

/// Queries against the engine's text with one position substituted.
///
/// The session holds the engine exclusively. Closing it, or dropping it,
/// restores the engine to its exact state before the session.
#[derive(Debug)]
pub struct EditSession<'a> {
    engine: &'a mut StaticEngine,
    pos: Pos,
    old: Symbol,
    new: Symbol,
    delta: MupsDelta,
    open: bool,
}

impl<'a> EditSession<'a> {
    pub(super) fn open(engine: &'a mut StaticEngine, pos: Pos, c: Symbol) -> Result<Self> {
        let delta = substitution_delta(&engine.text, &engine.mups, pos, c)?;
        let old = engine.text.at(pos);
        engine.mups.apply(&delta)?;
        engine.keys.apply_journaled(&delta)?;
        Ok(EditSession {
            engine,
            pos,
            old,
            new: c,
            delta,
            open: true,
        })
    }

    pub fn position(&self) -> Pos {
        self.pos
    }

    pub fn old_symbol(&self) -> Symbol {
        self.old
    }

    pub fn new_symbol(&self) -> Symbol {
        self.new
    }

    /// MUPS changes made by the substitution.
    pub fn delta(&self) -> &MupsDelta {
        &self.delta
    }

    fn arm(&self, k: CenterIndex) -> usize {
        if self.old == self.new {
            return self.engine.arm(k);
        }
        self.engine
            .lce
            .max_pal_radius_skipping(k, self.pos, self.new)
            .expect("MUPS center inside the text")
    }

    pub fn sups(&self, p: Pos, q: Pos) -> Result<SupsAnswer> {
        let text = &self.engine.text;
        check_query(p, q, text.origin(), text.end())?;
        Ok(self.engine.keys.sups(p, q, |k| self.arm(k)))
    }

    fn revert(&mut self) {
        if !self.open {
            return;
        }
        self.open = false;
        self.engine.mups.apply(&self.delta.inverse()).expect("session delta was applied");
        self.engine.keys.undo(&self.delta).expect("session delta was applied");
    }

    /// Discards the substitution.
    pub fn close(mut self) {
        self.revert();
    }
}

impl Drop for EditSession<'_> {
    fn drop(&mut self) {
        self.revert();
    }
}
