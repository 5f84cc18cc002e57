//! Reference strings with known answers.

/// Text whose minimal unique palindromes are `bbb`, `bbabb`, `abba` and `aba`;
/// interval `[5, 6]` has the two SUPSs `[2, 6]` and `[4, 8]`.
pub const REFERENCE_TEXT: &str = "babbbabbababb";

/// Parts of the 90-character string where interval `[18, 18]` has four SUPSs.
pub const FOUR_SUPS_PARTS: [&str; 4] = [
    "cababacababacababacabacabacabacabaca",
    "Aababacababacababa",
    "Abacababacababacab",
    "Abacabacabacabacab",
];

/// The four-SUPS witness, assembled.
pub fn four_sups_text() -> String {
    FOUR_SUPS_PARTS.concat()
}

/// Binary text with three SUPSs for position 5.
pub const THREE_SUPS_BINARY: &str = "baaababab";
