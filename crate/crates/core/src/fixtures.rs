//! Named braid words used by tests, demos and the CLI.

use crate::braid::BraidWord;

/// `(name, word)` pairs. Every word is classical.
pub const BRAIDS: &[(&str, &str)] = &[
    ("unknot", "B1;"),
    ("unlink2", "B2;"),
    ("hopf", "B2; s1 s1"),
    ("trefoil", "B2; s1 s1 s1"),
    ("borromean", "B3; s1 s2^-1 s1 s2^-1 s1 s2^-1"),
    // alternating 5-crossing 3-braid; two components with linking number 0
    ("whitehead", "B3; s1 s1 s2^-1 s1 s2^-1"),
];

pub fn braid(name: &str) -> Option<BraidWord> {
    BRAIDS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| text.parse().expect("fixture words parse"))
}

pub fn all_braids() -> Vec<(&'static str, BraidWord)> {
    BRAIDS.iter().map(|(n, t)| (*n, t.parse().expect("fixture words parse"))).collect()
}
