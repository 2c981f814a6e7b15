//! Signed permutations, patterns and pattern containment.
//!
//! Entries are stored as signed integers: `j > 0` is the unbarred letter `j`,
//! `-j` is the barred letter. A signed permutation of length `n` uses every
//! absolute value in `1..=n` exactly once.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One letter of a signed word.
pub type Entry = i32;

/// Longest pattern the matcher supports.
pub const MAX_PATTERN_LEN: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("malformed token {token:?} at index {index}")]
    MalformedToken { index: usize, token: String },
    #[error("zero entry at index {index}")]
    ZeroEntry { index: usize },
    #[error("repeated absolute value {value} at index {index}")]
    RepeatedValue { index: usize, value: u32 },
    #[error("absolute value {value} at index {index} is outside 1..={len}")]
    ValueOutOfRange { index: usize, value: u32, len: usize },
    #[error("pattern must have at least one entry")]
    EmptyPattern,
    #[error("pattern of length {0} exceeds the supported maximum of {MAX_PATTERN_LEN}")]
    PatternTooLong(usize),
}

/// An element of the hyperoctahedral group `B_n`, written as a word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedPermutation {
    entries: Vec<Entry>,
}

impl SignedPermutation {
    pub fn new(entries: Vec<Entry>) -> Result<Self, PermError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for (index, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(PermError::ZeroEntry { index });
            }
            let value = e.unsigned_abs();
            if value as usize > n {
                return Err(PermError::ValueOutOfRange { index, value, len: n });
            }
            if seen[value as usize] {
                return Err(PermError::RepeatedValue { index, value });
            }
            seen[value as usize] = true;
        }
        Ok(Self { entries })
    }

    /// Caller guarantees the invariants hold.
    pub(crate) fn from_vec_unchecked(entries: Vec<Entry>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok(), "invalid entries {entries:?}");
        Self { entries }
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: (1..=n as Entry).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Entry> {
        self.entries
    }

    /// The unsigned permutation `|π|`.
    pub fn abs(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.unsigned_abs()).collect()
    }

    /// Signed image of `x` (nonzero, `|x| <= n`) under the convention `π(-x) = -π(x)`.
    pub fn apply(&self, x: Entry) -> Entry {
        let image = self.entries[x.unsigned_abs() as usize - 1];
        if x > 0 {
            image
        } else {
            -image
        }
    }

    /// True iff `π ∘ π` is the identity of `B_n`.
    pub fn is_signed_involution(&self) -> bool {
        (1..=self.len() as Entry).all(|x| self.apply(self.apply(x)) == x)
    }

    pub fn contains(&self, tau: &Pattern) -> bool {
        contains(&self.entries, tau)
    }

    pub fn avoids(&self, tau: &Pattern) -> bool {
        !self.contains(tau)
    }
}

impl AsRef<[Entry]> for SignedPermutation {
    fn as_ref(&self) -> &[Entry] {
        &self.entries
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[Entry]) -> fmt::Result {
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// A word of nonzero signed integers with pairwise distinct absolute values.
///
/// Containment only looks at relative order and signs, so it is defined for
/// partial words built during a depth-first search as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PrefixWord {
    entries: Vec<Entry>,
}

impl PrefixWord {
    pub fn new(entries: Vec<Entry>) -> Result<Self, PermError> {
        let mut seen = std::collections::HashSet::new();
        for (index, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(PermError::ZeroEntry { index });
            }
            if !seen.insert(e.unsigned_abs()) {
                return Err(PermError::RepeatedValue { index, value: e.unsigned_abs() });
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn contains(&self, tau: &Pattern) -> bool {
        contains(&self.entries, tau)
    }

    pub fn avoids(&self, tau: &Pattern) -> bool {
        !self.contains(tau)
    }
}

impl From<SignedPermutation> for PrefixWord {
    fn from(p: SignedPermutation) -> Self {
        Self { entries: p.entries }
    }
}

/// A signed permutation used as a forbidden configuration.
///
/// Precomputes the sign and pairwise-order tables used by the matcher.
#[derive(Clone)]
pub struct Pattern {
    word: SignedPermutation,
    positive: u16,
    // bit b of less[a] is set iff |tau_a| < |tau_b|
    less: [u16; MAX_PATTERN_LEN],
}

impl Pattern {
    pub fn new(word: SignedPermutation) -> Result<Self, PermError> {
        let k = word.len();
        if k == 0 {
            return Err(PermError::EmptyPattern);
        }
        if k > MAX_PATTERN_LEN {
            return Err(PermError::PatternTooLong(k));
        }
        let e = word.entries();
        let mut positive = 0u16;
        let mut less = [0u16; MAX_PATTERN_LEN];
        for a in 0..k {
            if e[a] > 0 {
                positive |= 1 << a;
            }
            for b in 0..k {
                if e[a].unsigned_abs() < e[b].unsigned_abs() {
                    less[a] |= 1 << b;
                }
            }
        }
        Ok(Self { word, positive, less })
    }

    pub fn from_entries(entries: Vec<Entry>) -> Result<Self, PermError> {
        Self::new(SignedPermutation::new(entries)?)
    }

    pub fn parse(text: &str) -> Result<Self, PermError> {
        parse_pattern(text)
    }

    pub fn word(&self) -> &SignedPermutation {
        &self.word
    }

    pub fn entries(&self) -> &[Entry] {
        self.word.entries()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical text form: comma-separated signed integers, no spaces.
    pub fn text(&self) -> String {
        self.to_string()
    }

    #[inline]
    fn is_positive(&self, a: usize) -> bool {
        self.positive >> a & 1 == 1
    }

    #[inline]
    fn is_less(&self, a: usize, b: usize) -> bool {
        self.less[a] >> b & 1 == 1
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({self})")
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, self.entries())
    }
}

impl PartialEq for Pattern {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for Pattern {}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word.cmp(&other.word)
    }
}

impl std::hash::Hash for Pattern {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state)
    }
}

impl FromStr for Pattern {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pattern(s)
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.text())
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_pattern(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses comma- and/or whitespace-separated nonzero integers; a leading
/// minus marks a barred letter.
pub fn parse_pattern(text: &str) -> Result<Pattern, PermError> {
    let mut entries = Vec::new();
    for (index, token) in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
    {
        let valid_shape = {
            let digits = token.strip_prefix('-').unwrap_or(token);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        let value: Entry = match token.parse() {
            Ok(v) if valid_shape => v,
            _ => {
                return Err(PermError::MalformedToken { index, token: token.to_string() });
            }
        };
        entries.push(value);
    }
    Pattern::from_entries(entries)
}

/// True iff `word` has a subsequence order-isomorphic to `tau` in absolute
/// value with matching signs. `word` must have distinct absolute values.
pub fn contains(word: &[Entry], tau: &Pattern) -> bool {
    let k = tau.len();
    (k..=word.len()).any(|end| occurrence_ends_at_last(&word[..end], tau))
}

pub fn avoids(word: &[Entry], tau: &Pattern) -> bool {
    !contains(word, tau)
}

/// True iff some occurrence of `tau` in `word` uses the last letter of `word`.
///
/// If `word[..len-1]` avoids `tau`, this is exactly whether `word` contains it,
/// which is what the prefix searches rely on.
pub fn occurrence_ends_at_last(word: &[Entry], tau: &Pattern) -> bool {
    let k = tau.len();
    let m = word.len();
    if m < k {
        return false;
    }
    let last = word[m - 1];
    if (last > 0) != tau.is_positive(k - 1) {
        return false;
    }
    if k == 1 {
        return true;
    }
    let mut chosen = [0usize; MAX_PATTERN_LEN];
    chosen[k - 1] = m - 1;
    match_from(word, tau, 0, 0, &mut chosen)
}

fn match_from(
    word: &[Entry],
    tau: &Pattern,
    a: usize,
    start: usize,
    chosen: &mut [usize; MAX_PATTERN_LEN],
) -> bool {
    let k = tau.len();
    if a == k - 1 {
        return true;
    }
    let last_abs = word[word.len() - 1].unsigned_abs();
    let want_positive = tau.is_positive(a);
    let below_last = tau.is_less(a, k - 1);
    // leave room for tau[a+1..k-1] before the fixed last position
    let stop = word.len() - 1 - (k - 2 - a);
    'pos: for p in start..stop {
        let x = word[p];
        if (x > 0) != want_positive {
            continue;
        }
        let xa = x.unsigned_abs();
        if (xa < last_abs) != below_last {
            continue;
        }
        for b in 0..a {
            if (xa < word[chosen[b]].unsigned_abs()) != tau.is_less(a, b) {
                continue 'pos;
            }
        }
        chosen[a] = p;
        if match_from(word, tau, a + 1, p + 1, chosen) {
            return true;
        }
    }
    false
}
