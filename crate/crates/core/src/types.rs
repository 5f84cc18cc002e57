//! Positions, intervals, centers and the text they index.
//!
//! All positions are 1-based and absolute: a window that has slid past its
//! first characters keeps addressing the remaining ones by their original
//! positions.

use std::fmt;

use crate::error::{Error, Result};

/// 1-based absolute text position.
pub type Pos = usize;

/// Dense character code. Codes are `< Alphabet::sigma()`.
pub type Symbol = u32;

/// A closed, non-empty interval `[start, end]` of text positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub start: Pos,
    pub end: Pos,
}

impl Interval {
    pub fn new(start: Pos, end: Pos) -> Result<Self> {
        if start > end || start == 0 {
            return Err(Error::InvalidInterval { start, end });
        }
        Ok(Interval { start, end })
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn center(&self) -> CenterIndex {
        CenterIndex(self.start + self.end - 1)
    }

    /// One-step contraction `[start+1, end-1]`, or `None` when it is empty.
    pub fn contraction(&self) -> Option<Interval> {
        if self.len() > 2 {
            Some(Interval {
                start: self.start + 1,
                end: self.end - 1,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

/// A palindrome center on the doubled axis: the interval `[i, j]` has center
/// `k = i + j - 1`. Odd `k` sits on a character, even `k` on the gap between
/// positions `k/2` and `k/2 + 1`.
///
/// Radii count characters on one side of the center, so the palindrome of
/// radius `r` has length `2r + 1` at odd centers and `2r` at even ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CenterIndex(pub usize);

impl CenterIndex {
    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    /// Smallest radius giving a non-empty palindrome.
    pub fn min_radius(self) -> usize {
        if self.is_odd() {
            0
        } else {
            1
        }
    }

    pub fn length_for_radius(self, radius: usize) -> usize {
        if self.is_odd() {
            2 * radius + 1
        } else {
            2 * radius
        }
    }

    pub fn radius_of_length(self, len: usize) -> usize {
        len / 2
    }

    /// The interval of radius `radius` around this center, if it is non-empty
    /// and starts at a position `>= 1`.
    pub fn interval(self, radius: usize) -> Option<Interval> {
        let len = self.length_for_radius(radius);
        if len == 0 || self.0 < len {
            return None;
        }
        Some(Interval {
            start: (self.0 + 2 - len) / 2,
            end: (self.0 + len) / 2,
        })
    }

    /// Largest radius that stays at or right of `begin`.
    pub fn left_slack(self, begin: Pos) -> usize {
        (self.0 + 2 - 2 * begin) / 2
    }

    /// Largest radius that stays at or left of `end`.
    pub fn right_slack(self, end: Pos) -> usize {
        (2 * end - self.0) / 2
    }

    /// Smallest radius whose interval contains `[p, q]`.
    pub fn radius_covering(self, p: Pos, q: Pos) -> usize {
        let (lo, hi) = if self.is_odd() {
            let c = self.0.div_ceil(2);
            (c.saturating_sub(p), q.saturating_sub(c))
        } else {
            let c = self.0 / 2;
            ((c + 1).saturating_sub(p), q.saturating_sub(c))
        };
        lo.max(hi).max(self.min_radius())
    }

    /// Mirror image of this center about `axis`.
    pub fn mirror(self, axis: CenterIndex) -> CenterIndex {
        CenterIndex(2 * axis.0 - self.0)
    }
}

impl fmt::Display for CenterIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_odd() {
            write!(f, "{}", self.0.div_ceil(2))
        } else {
            write!(f, "{}.5", self.0 / 2)
        }
    }
}

/// Dense remapping of input bytes to small integer codes, in order of first
/// appearance. The original bytes are kept for output.
#[derive(Clone, Debug)]
pub struct Alphabet {
    symbols: Vec<u8>,
    codes: [Option<Symbol>; 256],
}

impl Default for Alphabet {
    fn default() -> Self {
        Alphabet {
            symbols: Vec::new(),
            codes: [None; 256],
        }
    }
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn sigma(&self) -> usize {
        self.symbols.len()
    }

    /// Code for `byte`, registering it if it is new.
    pub fn encode(&mut self, byte: u8) -> Symbol {
        if let Some(code) = self.codes[byte as usize] {
            return code;
        }
        let code = self.symbols.len() as Symbol;
        self.symbols.push(byte);
        self.codes[byte as usize] = Some(code);
        code
    }

    pub fn lookup(&self, byte: u8) -> Option<Symbol> {
        self.codes[byte as usize]
    }

    pub fn decode(&self, symbol: Symbol) -> Result<u8> {
        self.symbols
            .get(symbol as usize)
            .copied()
            .ok_or(Error::UnknownSymbol {
                symbol,
                sigma: self.sigma(),
            })
    }

    pub fn encode_all(&mut self, bytes: &[u8]) -> Vec<Symbol> {
        bytes.iter().map(|&b| self.encode(b)).collect()
    }
}

/// A character sequence whose first stored character sits at absolute
/// position `origin`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Text {
    chars: Vec<Symbol>,
    origin: Pos,
}

impl Text {
    pub fn new(chars: Vec<Symbol>) -> Self {
        Text { chars, origin: 1 }
    }

    pub fn with_origin(chars: Vec<Symbol>, origin: Pos) -> Self {
        assert!(origin >= 1, "positions are 1-based");
        Text { chars, origin }
    }

    /// Remaps `bytes` densely and returns the text with its alphabet.
    pub fn from_bytes(bytes: &[u8]) -> (Text, Alphabet) {
        let mut alphabet = Alphabet::new();
        let chars = alphabet.encode_all(bytes);
        (Text::new(chars), alphabet)
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn origin(&self) -> Pos {
        self.origin
    }

    /// Last position, or `origin - 1` when empty.
    pub fn end(&self) -> Pos {
        self.origin + self.chars.len() - 1
    }

    pub fn chars(&self) -> &[Symbol] {
        &self.chars
    }

    pub fn at(&self, pos: Pos) -> Symbol {
        self.chars[pos - self.origin]
    }

    pub fn get(&self, pos: Pos) -> Option<Symbol> {
        pos.checked_sub(self.origin)
            .and_then(|i| self.chars.get(i))
            .copied()
    }

    pub fn check(&self, iv: Interval) -> Result<()> {
        if iv.start < self.origin || iv.end > self.end() || self.is_empty() {
            return Err(Error::OutOfRange {
                start: iv.start,
                end: iv.end,
                lo: self.origin,
                hi: self.end(),
            });
        }
        Ok(())
    }

    pub fn slice(&self, iv: Interval) -> Result<&[Symbol]> {
        self.check(iv)?;
        Ok(&self.chars[iv.start - self.origin..=iv.end - self.origin])
    }

    pub fn is_palindrome(&self, iv: Interval) -> Result<bool> {
        let s = self.slice(iv)?;
        Ok(s.iter().eq(s.iter().rev()))
    }

    /// Number of occurrences of the substring at `iv` (`None` is the empty
    /// string, which is never unique).
    pub fn count_occurrences(&self, iv: Option<Interval>) -> Result<usize> {
        let Some(iv) = iv else {
            return Ok((self.len() + 1).max(2));
        };
        let pat = self.slice(iv)?;
        Ok(self.chars.windows(pat.len()).filter(|w| *w == pat).count())
    }

    pub fn smallest_period(&self, iv: Interval) -> Result<usize> {
        let s = self.slice(iv)?;
        Ok((1..=s.len())
            .find(|&p| (p..s.len()).all(|i| s[i] == s[i - p]))
            .unwrap_or(s.len()))
    }

    /// Copy with `pos` replaced by `symbol`.
    pub fn substituted(&self, pos: Pos, symbol: Symbol) -> Result<Text> {
        self.check(Interval { start: pos, end: pos })?;
        let mut chars = self.chars.clone();
        chars[pos - self.origin] = symbol;
        Ok(Text {
            chars,
            origin: self.origin,
        })
    }
}
