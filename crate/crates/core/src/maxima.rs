//! Layered right-to-left maxima of the unbarred subword.
//!
//! Level 1 holds the right-to-left maxima of the unbarred letters; level
//! `r + 1` holds the right-to-left maxima of what is left after removing
//! levels `1..=r`.

use crate::perm::{Entry, SignedPermutation};

/// Unbarred positions grouped by level. Positions are 0-based indices into
/// the host permutation, increasing within each level.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RtlDecomposition {
    levels: Vec<Vec<usize>>,
}

impl RtlDecomposition {
    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Positions of the `r`-right-to-left maxima (1-based `r`); empty if absent.
    pub fn level(&self, r: usize) -> &[usize] {
        assert!(r >= 1, "levels are numbered from 1");
        self.levels.get(r - 1).map_or(&[], Vec::as_slice)
    }

    /// Level of each position, `None` for barred positions.
    pub fn level_of_positions(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, level) in self.levels.iter().enumerate() {
            for &p in level {
                out[p] = Some(i + 1);
            }
        }
        out
    }
}

pub fn rtl_decomposition(pi: &SignedPermutation) -> RtlDecomposition {
    rtl_levels_of(pi.entries())
}

pub(crate) fn rtl_levels_of(entries: &[Entry]) -> RtlDecomposition {
    let mut remaining: Vec<usize> = (0..entries.len()).filter(|&i| entries[i] > 0).collect();
    let mut levels = Vec::new();
    while !remaining.is_empty() {
        let mut level = Vec::new();
        let mut rest = Vec::with_capacity(remaining.len());
        let mut best = 0;
        for &p in remaining.iter().rev() {
            if entries[p] > best {
                best = entries[p];
                level.push(p);
            } else {
                rest.push(p);
            }
        }
        level.reverse();
        rest.reverse();
        levels.push(level);
        remaining = rest;
    }
    RtlDecomposition { levels }
}

/// Values of the `r`-right-to-left maxima, left to right.
pub fn r_maxima_values(pi: &SignedPermutation, r: usize) -> Vec<Entry> {
    assert!(r >= 1, "levels are numbered from 1");
    rtl_decomposition(pi).level(r).iter().map(|&p| pi.entries()[p]).collect()
}
