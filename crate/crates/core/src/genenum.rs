//! Exhaustive generation of `B_n` and `SI_n` and exact avoider counting.
//!
//! Both sets are generated left to right. For `B_n` each step appends an
//! unused absolute value with a sign. For `SI_n` each unfilled position `i`
//! picks `±i` (a fixed point) or `±j` for an unfilled `j > i`, which also
//! fixes position `j` to `±i`; positions already fixed by an earlier choice
//! are taken as they are. Either way positions `0..len` are final once
//! reached, so a prefix that contains the pattern can be pruned.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::perm::{self, Entry, Pattern, SignedPermutation};

/// The ambient set avoiders are counted in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AmbientSet {
    /// All signed permutations.
    #[serde(rename = "b")]
    B,
    /// Signed involutions.
    #[serde(rename = "si")]
    SI,
}

impl AmbientSet {
    /// `|B_n| = 2^n n!` or the number of signed involutions, saturating.
    pub fn size(self, n: usize) -> u128 {
        match self {
            AmbientSet::B => (1..=n as u128).fold(1u128, |acc, i| acc.saturating_mul(2 * i)),
            AmbientSet::SI => signed_involution_count(n),
        }
    }
}

impl fmt::Display for AmbientSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmbientSet::B => "b",
            AmbientSet::SI => "si",
        })
    }
}

impl FromStr for AmbientSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(AmbientSet::B),
            "si" => Ok(AmbientSet::SI),
            other => Err(format!("unknown set {other:?}, expected b or si")),
        }
    }
}

/// `I(n) = 2 I(n-1) + 2(n-1) I(n-2)`, saturating.
pub fn signed_involution_count(n: usize) -> u128 {
    let (mut prev, mut cur) = (1u128, 1u128);
    for m in 1..=n as u128 {
        let next = cur.saturating_mul(2).saturating_add(prev.saturating_mul(2 * (m - 1)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact avoider counts `|set_n(τ)|` for `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AvoidanceSequence {
    pub pattern: Pattern,
    pub set: AmbientSet,
    pub counts: Vec<u64>,
}

impl AvoidanceSequence {
    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Incremental left-to-right builder shared by the iterator and the counter.
#[derive(Clone)]
struct Builder {
    n: usize,
    set: AmbientSet,
    // 0 marks an unfilled position
    word: Vec<Entry>,
    // B: absolute value taken; SI unused (word itself records filled positions)
    used: Vec<bool>,
    len: usize,
    // per step: whether the position was filled by an earlier partner choice
    forced: Vec<bool>,
}

impl Builder {
    fn new(n: usize, set: AmbientSet) -> Self {
        Self { n, set, word: vec![0; n], used: vec![false; n + 1], len: 0, forced: Vec::with_capacity(n) }
    }

    fn is_complete(&self) -> bool {
        self.len == self.n
    }

    fn prefix(&self) -> &[Entry] {
        &self.word[..self.len]
    }

    /// Number of option slots at the current step; slot `o` encodes value
    /// `o/2 + 1` with sign `+` for even `o`.
    fn slots(&self) -> usize {
        2 * self.n
    }

    /// Value for slot `o` if it is a legal next step.
    fn option(&self, o: usize) -> Option<Entry> {
        let abs = o / 2 + 1;
        let value = if o.is_multiple_of(2) { abs as Entry } else { -(abs as Entry) };
        match self.set {
            AmbientSet::B => (!self.used[abs]).then_some(value),
            AmbientSet::SI => {
                let pos = self.len + 1;
                let pre = self.word[self.len];
                if pre != 0 {
                    (pre == value).then_some(value)
                } else if abs == pos || (abs > pos && self.word[abs - 1] == 0) {
                    Some(value)
                } else {
                    None
                }
            }
        }
    }

    fn push(&mut self, value: Entry) {
        let abs = value.unsigned_abs() as usize;
        match self.set {
            AmbientSet::B => {
                self.word[self.len] = value;
                self.used[abs] = true;
                self.forced.push(false);
            }
            AmbientSet::SI => {
                if self.word[self.len] != 0 {
                    self.forced.push(true);
                } else {
                    let pos = self.len + 1;
                    self.word[self.len] = value;
                    if abs != pos {
                        let partner = pos as Entry;
                        self.word[abs - 1] = if value > 0 { partner } else { -partner };
                    }
                    self.forced.push(false);
                }
            }
        }
        self.len += 1;
    }

    fn pop(&mut self) {
        self.len -= 1;
        let forced = self.forced.pop().expect("pop after push");
        let value = self.word[self.len];
        let abs = value.unsigned_abs() as usize;
        match self.set {
            AmbientSet::B => {
                self.used[abs] = false;
                self.word[self.len] = 0;
            }
            AmbientSet::SI => {
                if !forced {
                    self.word[self.len] = 0;
                    if abs != self.len + 1 {
                        self.word[abs - 1] = 0;
                    }
                }
            }
        }
    }
}

/// Streams every element of `set_n` once, in a fixed order: at each
/// position absolute values ascend and `+` comes before `-`.
pub fn enumerate(n: usize, set: AmbientSet) -> Enumerate {
    Enumerate { builder: Builder::new(n, set), next_slot: vec![0], done: false }
}

/// Iterator returned by [`enumerate`].
pub struct Enumerate {
    builder: Builder,
    // next slot to try at each open depth
    next_slot: Vec<usize>,
    done: bool,
}

impl Iterator for Enumerate {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.done {
            return None;
        }
        loop {
            if self.builder.is_complete() {
                let out = SignedPermutation::from_vec_unchecked(self.builder.word.clone());
                // backtrack past the leaf before the next call
                self.next_slot.pop();
                if self.builder.len == 0 {
                    self.done = true;
                } else {
                    self.builder.pop();
                }
                return Some(out);
            }
            let depth = self.builder.len;
            let slot = self.next_slot[depth];
            let found = (slot..self.builder.slots()).find_map(|o| self.builder.option(o).map(|v| (o, v)));
            match found {
                Some((o, v)) => {
                    self.next_slot[depth] = o + 1;
                    self.builder.push(v);
                    self.next_slot.push(0);
                }
                None => {
                    self.next_slot.pop();
                    if depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.builder.pop();
                }
            }
        }
    }
}

fn count_below(builder: &mut Builder, tau: &Pattern) -> u64 {
    if builder.is_complete() {
        return 1;
    }
    let mut total = 0;
    for o in 0..builder.slots() {
        if let Some(v) = builder.option(o) {
            builder.push(v);
            if !perm::occurrence_ends_at_last(builder.prefix(), tau) {
                total += count_below(builder, tau);
            }
            builder.pop();
        }
    }
    total
}

/// Builders for every avoiding prefix of length `depth` (or shorter complete ones).
fn frontier(n: usize, set: AmbientSet, tau: &Pattern, depth: usize) -> Vec<Builder> {
    let mut level = vec![Builder::new(n, set)];
    for _ in 0..depth.min(n) {
        let mut next = Vec::new();
        for b in level {
            for o in 0..b.slots() {
                if let Some(v) = b.option(o) {
                    let mut child = b.clone();
                    child.push(v);
                    if !perm::occurrence_ends_at_last(child.prefix(), tau) {
                        next.push(child);
                    }
                }
            }
        }
        level = next;
    }
    level
}

/// `|set_n(τ)|`, by a containment-pruned depth-first search.
///
/// The top two levels of the search tree are split into independent work
/// units on the current rayon pool; the result does not depend on the
/// number of threads.
pub fn count_avoiders(n: usize, tau: &Pattern, set: AmbientSet) -> u64 {
    if n < 6 {
        return count_below(&mut Builder::new(n, set), tau);
    }
    frontier(n, set, tau, 2)
        .into_par_iter()
        .map(|mut b| count_below(&mut b, tau))
        .sum()
}

pub fn sequence(tau: &Pattern, set: AmbientSet, n_max: usize) -> AvoidanceSequence {
    let counts = (0..=n_max).into_par_iter().map(|n| count_avoiders(n, tau, set)).collect();
    AvoidanceSequence { pattern: tau.clone(), set, counts }
}
