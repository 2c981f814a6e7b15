//! Sign-toggling bijections between avoider sets.
//!
//! Each map keeps `|π|` fixed and flips the sign of the letters selected by
//! a rule that reads only the input. All four are total on `B_n` and are
//! their own inverses.

use crate::maxima::rtl_decomposition;
use crate::perm::{Entry, SignedPermutation};

fn toggle_where(pi: &SignedPermutation, mut flip: impl FnMut(usize) -> bool) -> SignedPermutation {
    let out = pi
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| if flip(i) { -x } else { x })
        .collect();
    SignedPermutation::from_vec_unchecked(out)
}

/// Flips every letter that has an `r`-right-to-left maximum to its right
/// exceeding its absolute value.
///
/// Maps avoiders of `τ (l+1)…k` onto avoiders of `τ̄ (l+1)…k` when `r = k-l`.
pub fn phi_prefix(pi: &SignedPermutation, r: usize) -> SignedPermutation {
    assert!(r >= 1, "levels are numbered from 1");
    let levels = rtl_decomposition(pi);
    let e = pi.entries();
    // largest level-r value strictly right of each position
    let mut right_max = vec![0; e.len()];
    let mut best = 0;
    let mut level = levels.level(r).iter().rev().peekable();
    for i in (0..e.len()).rev() {
        right_max[i] = best;
        if level.peek() == Some(&&i) {
            best = best.max(e[i]);
            level.next();
        }
    }
    toggle_where(pi, |i| right_max[i] > e[i].abs())
}

/// Flips every letter `π_i` whose north-east region (later positions,
/// larger values) holds a decreasing run of `r` unbarred letters.
///
/// Counting first-level right-to-left maxima in that region instead is not
/// enough: `1 4 3 2 5` contains `1432` but has a single such maximum above
/// `1`. Toggled letters never lie north-east of a first-level maximum, so
/// those maxima are fixed.
///
/// Maps avoiders of `τ k(k-1)…(l+1)` onto avoiders of `τ̄ k(k-1)…(l+1)` when
/// `r = k-l`.
pub fn psi_prefix(pi: &SignedPermutation, r: usize) -> SignedPermutation {
    assert!(r >= 1, "thresholds start at 1");
    let e = pi.entries();
    let n = e.len();
    let mut run = vec![0usize; n];
    toggle_where(pi, |i| {
        let floor = e[i].abs();
        // run[j]: longest decreasing unbarred run starting at j inside the region
        let mut longest = 0;
        for j in (i + 1..n).rev() {
            run[j] = 0;
            if e[j] > floor {
                let tail = (j + 1..n).filter(|&q| e[q] > floor && e[q] < e[j]).map(|q| run[q]).max();
                run[j] = 1 + tail.unwrap_or(0);
                longest = longest.max(run[j]);
            }
        }
        longest >= r
    })
}

/// Flips every letter sitting strictly between an unbarred larger letter on
/// its left and an unbarred smaller letter on its right.
///
/// Matches involutions avoiding `321` with those avoiding `3 2̄ 1`.
pub fn varphi(pi: &SignedPermutation) -> SignedPermutation {
    let e = pi.entries();
    let n = e.len();
    // max unbarred value strictly left, min unbarred value strictly right
    let mut left_max = vec![0; n];
    let mut best = 0;
    for i in 0..n {
        left_max[i] = best;
        if e[i] > 0 {
            best = best.max(e[i]);
        }
    }
    let mut right_min = vec![Entry::MAX; n];
    let mut best = Entry::MAX;
    for i in (0..n).rev() {
        right_min[i] = best;
        if e[i] > 0 {
            best = best.min(e[i]);
        }
    }
    toggle_where(pi, |i| {
        let a = e[i].abs();
        left_max[i] > a && right_min[i] < a
    })
}

/// Flips every letter `π_i` followed by some `π_j < 0 < π_k` (`i < j < k`)
/// with `|π_i| < π_k < |π_j|`.
///
/// Matches avoiders of `2̄ 1 4̄ 3` with avoiders of `2 1̄ 4̄ 3`.
pub fn psi_swap(pi: &SignedPermutation) -> SignedPermutation {
    let e = pi.entries();
    let n = e.len();
    toggle_where(pi, |i| {
        let a = e[i].abs();
        (i + 1..n).any(|j| {
            e[j] < 0 && -e[j] > a && (j + 1..n).any(|k| e[k] > a && e[k] < -e[j])
        })
    })
}
