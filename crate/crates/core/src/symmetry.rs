//! Trivial equivalences: reverse, complement, bar and inverse, and the
//! orbits they generate on patterns of a fixed length.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::genenum::{self, AmbientSet};
use crate::perm::{Entry, Pattern, SignedPermutation};

/// Which symmetry group acts on patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryMode {
    /// Generated by reverse, complement, bar and inverse.
    General,
    /// Generated by bar, reverse∘complement and inverse; these are the
    /// operations that map signed involutions to signed involutions.
    Involutive,
}

impl SymmetryMode {
    /// The mode whose group preserves avoidance counts in `set`.
    pub fn for_set(set: AmbientSet) -> Self {
        match set {
            AmbientSet::B => SymmetryMode::General,
            AmbientSet::SI => SymmetryMode::Involutive,
        }
    }

    pub fn generators(self) -> &'static [fn(&SignedPermutation) -> SignedPermutation] {
        match self {
            SymmetryMode::General => &[bar, reverse, complement, inverse],
            SymmetryMode::Involutive => &[bar, reverse_complement, inverse],
        }
    }
}

pub fn bar(pi: &SignedPermutation) -> SignedPermutation {
    SignedPermutation::from_vec_unchecked(pi.entries().iter().map(|e| -e).collect())
}

pub fn reverse(pi: &SignedPermutation) -> SignedPermutation {
    SignedPermutation::from_vec_unchecked(pi.entries().iter().rev().copied().collect())
}

/// `x ↦ n+1-x` for unbarred letters and `x ↦ -(n+1)-x` for barred ones.
pub fn complement(pi: &SignedPermutation) -> SignedPermutation {
    let top = pi.len() as Entry + 1;
    SignedPermutation::from_vec_unchecked(
        pi.entries().iter().map(|&x| if x > 0 { top - x } else { -top - x }).collect(),
    )
}

/// Signed inverse: `π_i = ±j` gives `π⁻¹_j = ±i`.
pub fn inverse(pi: &SignedPermutation) -> SignedPermutation {
    let mut out = vec![0; pi.len()];
    for (i, &x) in pi.entries().iter().enumerate() {
        let pos = i as Entry + 1;
        out[x.unsigned_abs() as usize - 1] = if x > 0 { pos } else { -pos };
    }
    SignedPermutation::from_vec_unchecked(out)
}

pub fn reverse_complement(pi: &SignedPermutation) -> SignedPermutation {
    reverse(&complement(pi))
}

/// An orbit of patterns under a symmetry group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryClass {
    members: BTreeSet<Pattern>,
}

impl SymmetryClass {
    /// Lexicographically least member.
    pub fn representative(&self) -> &Pattern {
        self.members.first().expect("classes are nonempty")
    }

    pub fn members(&self) -> &BTreeSet<Pattern> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, tau: &Pattern) -> bool {
        self.members.contains(tau)
    }
}

pub fn symmetry_class(tau: &Pattern, mode: SymmetryMode) -> SymmetryClass {
    let mut members = BTreeSet::new();
    let mut queue = VecDeque::new();
    members.insert(tau.clone());
    queue.push_back(tau.word().clone());
    while let Some(p) = queue.pop_front() {
        for g in mode.generators() {
            let image = g(&p);
            let pattern = Pattern::new(image.clone()).expect("symmetries preserve validity");
            if members.insert(pattern) {
                queue.push_back(image);
            }
        }
    }
    SymmetryClass { members }
}

/// All orbits on length-`k` patterns, ordered by representative.
pub fn enumerate_symmetry_classes(k: usize, mode: SymmetryMode) -> Vec<SymmetryClass> {
    assert!(k >= 1, "patterns have length at least 1");
    let all: Vec<Pattern> = genenum::enumerate(k, AmbientSet::B)
        .map(|p| Pattern::new(p).expect("length within matcher limit"))
        .collect();
    // every orbit contains exactly one representative, so computing orbits of
    // all patterns in parallel and keeping those a pattern represents is exact
    let mut classes: Vec<SymmetryClass> = all
        .par_iter()
        .filter_map(|tau| {
            let class = symmetry_class(tau, mode);
            (class.representative() == tau).then_some(class)
        })
        .collect();
    classes.sort_by(|a, b| a.representative().cmp(b.representative()));
    classes
}
