//! Shortest unique palindromic substring (SUPS) queries.
//!
//! A SUPS for an interval `[p, q]` of a text is a shortest palindrome that
//! occurs exactly once in the text and whose occurrence contains `[p, q]`.
//! There are at most four of them for any interval. This crate answers such
//! queries over a static text ([`StaticEngine`]), over a sliding window
//! ([`SlidingEngine`]), and over a text with one pending substitution
//! ([`EditSession`]).
//!
//! The building blocks are public as well: a bidirectional LCE index
//! ([`lce`]), online maximal palindromes for a sliding window ([`maxpal`]),
//! minimal unique palindromic substrings ([`mups`]), a word-level
//! predecessor set ([`predsucc`]) and a dynamic range-minimum array whose
//! queries have bounded width ([`logrmq`]). Brute-force references live in
//! [`oracle`].
//!
//! ```
//! use sups_core::{StaticEngine, Text};
//!
//! let (text, alphabet) = Text::from_bytes(b"babbbabbababb");
//! let mut engine = StaticEngine::preprocess(text)?;
//! assert_eq!(engine.sups(5, 6)?.to_string(), "2: [2,6] [4,8] len=5");
//!
//! let a = alphabet.lookup(b'a').unwrap();
//! let session = engine.begin_substitution(7, a)?;
//! println!("{}", session.sups(5, 6)?);
//! session.close();
//! # Ok::<(), sups_core::Error>(())
//! ```

pub mod engine;
pub mod error;
pub mod fixtures;
pub mod lce;
pub mod logrmq;
pub mod maxpal;
pub mod mups;
pub mod oracle;
pub mod predsucc;
pub mod types;

pub use engine::{EditSession, SlidingEngine, StaticEngine, SupsAnswer};
pub use error::{Error, Result};
pub use logrmq::LogRmqArray;
pub use mups::{MupsDelta, MupsRecord, MupsSet};
pub use predsucc::OrderedPosSet;
pub use types::{Alphabet, CenterIndex, Interval, Pos, Symbol, Text};
