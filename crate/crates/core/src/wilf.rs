//! Wilf classification: group patterns by their avoidance sequences and
//! check the known equivalences by counting.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::genenum::{self, AmbientSet, AvoidanceSequence};
use crate::perm::{Entry, Pattern, SignedPermutation};
use crate::symmetry::{self, enumerate_symmetry_classes, SymmetryMode};

/// Jobs estimated above this many generated objects are refused unless forced.
pub const DEFAULT_COST_LIMIT: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WilfError {
    #[error("estimated work of {estimate} generated objects exceeds the limit of {limit}; pass --force or --extended to run anyway")]
    CostGuard { estimate: u128, limit: u128 },
    #[error("patterns have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("no patterns given")]
    NoPatterns,
}

/// Refuses oversized jobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostGuard {
    pub limit: Option<u128>,
}

impl Default for CostGuard {
    fn default() -> Self {
        Self { limit: Some(DEFAULT_COST_LIMIT) }
    }
}

impl CostGuard {
    pub fn unlimited() -> Self {
        Self { limit: None }
    }

    pub fn check(&self, estimate: u128) -> Result<(), WilfError> {
        match self.limit {
            Some(limit) if estimate > limit => Err(WilfError::CostGuard { estimate, limit }),
            _ => Ok(()),
        }
    }
}

/// Worst-case number of generated objects for `patterns` sequences up to `n_max`.
pub fn estimate_cost(set: AmbientSet, n_max: usize, patterns: usize) -> u128 {
    (0..=n_max)
        .map(|n| set.size(n))
        .fold(0u128, u128::saturating_add)
        .saturating_mul(patterns as u128)
}

/// Patterns sharing one avoidance sequence up to `n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfClass {
    /// Sorted; the first member is the class representative.
    pub members: Vec<Pattern>,
    pub sequence: AvoidanceSequence,
}

impl WilfClass {
    pub fn representative(&self) -> &Pattern {
        &self.members[0]
    }
}

/// Avoidance sequences for several patterns, computed in parallel.
pub fn sequences(patterns: &[Pattern], set: AmbientSet, n_max: usize) -> Vec<AvoidanceSequence> {
    patterns.par_iter().map(|t| genenum::sequence(t, set, n_max)).collect()
}

/// Groups patterns by exact sequence equality. Classes come out ordered by
/// representative.
pub fn wilf_partition(patterns: &[Pattern], set: AmbientSet, n_max: usize) -> Vec<WilfClass> {
    partition_sequences(sequences(patterns, set, n_max))
}

pub fn partition_sequences(seqs: Vec<AvoidanceSequence>) -> Vec<WilfClass> {
    let mut groups: BTreeMap<Vec<u64>, Vec<AvoidanceSequence>> = BTreeMap::new();
    for s in seqs {
        groups.entry(s.counts.clone()).or_default().push(s);
    }
    let mut classes: Vec<WilfClass> = groups
        .into_values()
        .map(|mut group| {
            group.sort_by(|a, b| a.pattern.cmp(&b.pattern));
            let members = group.iter().map(|s| s.pattern.clone()).collect();
            let sequence = group.swap_remove(0);
            WilfClass { members, sequence }
        })
        .collect();
    classes.sort_by(|a, b| a.representative().cmp(b.representative()));
    classes
}

/// Symmetry classes, their sequences and the resulting Wilf partition.
///
/// Equal sequences up to `n_max` are evidence of Wilf equivalence, not a
/// proof; `caveat` records that.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub k: usize,
    pub set: AmbientSet,
    pub mode: SymmetryMode,
    pub n_max: usize,
    pub symmetry_class_count: usize,
    pub wilf_classes: Vec<WilfClass>,
    pub caveat: bool,
}

impl ClassificationReport {
    pub fn wilf_class_count(&self) -> usize {
        self.wilf_classes.len()
    }
}

/// Classifies all length-`k` patterns for avoidance in `set` up to `n_max`,
/// using the symmetry group that preserves avoidance in `set`.
pub fn classify(k: usize, set: AmbientSet, n_max: usize, guard: CostGuard) -> Result<ClassificationReport, WilfError> {
    let mode = SymmetryMode::for_set(set);
    let classes = enumerate_symmetry_classes(k, mode);
    guard.check(estimate_cost(set, n_max, classes.len()))?;
    let reps: Vec<Pattern> = classes.iter().map(|c| c.representative().clone()).collect();
    let wilf_classes = wilf_partition(&reps, set, n_max);
    Ok(ClassificationReport {
        k,
        set,
        mode,
        n_max,
        symmetry_class_count: classes.len(),
        wilf_classes,
        caveat: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    RefutedAt { n: usize, left: u64, right: u64 },
}

impl Verdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Verdict::Consistent)
    }
}

pub fn compare_counts(left: &[u64], right: &[u64]) -> Verdict {
    match left.iter().zip(right).position(|(a, b)| a != b) {
        Some(n) => Verdict::RefutedAt { n, left: left[n], right: right[n] },
        None => Verdict::Consistent,
    }
}

/// Compares the two avoidance sequences entrywise up to `n_max`.
pub fn verify_equivalence(tau1: &Pattern, tau2: &Pattern, set: AmbientSet, n_max: usize) -> Result<Verdict, WilfError> {
    if tau1.len() != tau2.len() {
        return Err(WilfError::LengthMismatch(tau1.len(), tau2.len()));
    }
    let (a, b) = rayon::join(
        || genenum::sequence(tau1, set, n_max),
        || genenum::sequence(tau2, set, n_max),
    );
    Ok(compare_counts(&a.counts, &b.counts))
}

/// Which known equivalence an instance comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    /// `τ (l+1)…k ∼ τ̄ (l+1)…k`, in `B_n` and `SI_n`.
    BarPrefixIncreasing,
    /// `τ k…(l+1) ∼ τ̄ k…(l+1)`, in `B_n` and `SI_n`.
    BarPrefixDecreasing,
    /// `τ (l+1)…k ∼ τ k…(l+1)`, in `B_n` and `SI_n`.
    SuffixReversal,
    /// Every `τ` with `|τ| = 12…k` is equivalent to `12…k`.
    SignedIncreasing,
    /// `(2s+k)…(s+k+1) τ s…1 ∼I (2s+k)…(s+k+1) τ̄ s…1`.
    BarMiddle,
    /// `321 ∼I 3 2̄ 1`.
    Involution321,
    /// `2̄ 1 4̄ 3 ∼ 2 1̄ 4̄ 3`.
    Swap2143,
    /// `1234 ∼I 3412 ∼I 4321`.
    Guibert,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremInstance {
    pub statement: Statement,
    pub left: Pattern,
    pub right: Pattern,
    pub set: AmbientSet,
    pub n_max: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub n_max: usize,
    pub instances: Vec<TheoremInstance>,
}

impl TheoremReport {
    pub fn all_consistent(&self) -> bool {
        self.instances.iter().all(|i| i.verdict.is_consistent())
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremInstance> {
        self.instances.iter().filter(|i| !i.verdict.is_consistent())
    }
}

fn concat(prefix: &[Entry], suffix: impl IntoIterator<Item = Entry>) -> Pattern {
    let mut v = prefix.to_vec();
    v.extend(suffix);
    Pattern::from_entries(v).expect("instance patterns are valid")
}

/// Every statement instance with pattern length at most `max_len`.
pub fn theorem_instances(max_len: usize) -> Vec<(Statement, Pattern, Pattern, Vec<AmbientSet>)> {
    let both = vec![AmbientSet::B, AmbientSet::SI];
    let mut out = Vec::new();
    let p = |v: &[Entry]| Pattern::from_entries(v.to_vec()).expect("literal patterns are valid");

    for l in 1..max_len {
        let taus: Vec<SignedPermutation> = genenum::enumerate(l, AmbientSet::B).collect();
        for k in l + 1..=max_len {
            let (lo, hi) = (l as Entry + 1, k as Entry);
            for tau in &taus {
                let barred = symmetry::bar(tau);
                out.push((
                    Statement::BarPrefixIncreasing,
                    concat(tau.entries(), lo..=hi),
                    concat(barred.entries(), lo..=hi),
                    both.clone(),
                ));
                out.push((
                    Statement::BarPrefixDecreasing,
                    concat(tau.entries(), (lo..=hi).rev()),
                    concat(barred.entries(), (lo..=hi).rev()),
                    both.clone(),
                ));
            }
        }
    }
    for l in 0..max_len {
        let taus: Vec<SignedPermutation> = genenum::enumerate(l, AmbientSet::B).collect();
        for k in l + 2..=max_len {
            let (lo, hi) = (l as Entry + 1, k as Entry);
            for tau in &taus {
                out.push((
                    Statement::SuffixReversal,
                    concat(tau.entries(), lo..=hi),
                    concat(tau.entries(), (lo..=hi).rev()),
                    both.clone(),
                ));
            }
        }
    }
    for k in 1..=max_len {
        let id = Pattern::new(SignedPermutation::identity(k)).expect("identity is valid");
        for signs in 1u32..(1 << k) {
            let v: Vec<Entry> = (1..=k as Entry)
                .map(|i| if signs >> (i - 1) & 1 == 1 { -i } else { i })
                .collect();
            out.push((Statement::SignedIncreasing, p(&v), id.clone(), both.clone()));
        }
    }
    // outer blocks of size s on each side, middle τ on s+1..=s+k
    for s in 1..=max_len / 2 {
        for k in 1..=max_len.saturating_sub(2 * s) {
            let top: Vec<Entry> = (s as Entry + k as Entry + 1..=2 * s as Entry + k as Entry).rev().collect();
            let bottom: Vec<Entry> = (1..=s as Entry).rev().collect();
            for mid in genenum::enumerate(k, AmbientSet::B) {
                let shift = |x: Entry| if x > 0 { x + s as Entry } else { x - s as Entry };
                let tau: Vec<Entry> = mid.entries().iter().map(|&x| shift(x)).collect();
                let tau_bar: Vec<Entry> = tau.iter().map(|x| -x).collect();
                let build = |m: &[Entry]| {
                    let mut v = top.clone();
                    v.extend_from_slice(m);
                    v.extend_from_slice(&bottom);
                    p(&v)
                };
                out.push((Statement::BarMiddle, build(&tau), build(&tau_bar), vec![AmbientSet::SI]));
            }
        }
    }
    if max_len >= 3 {
        out.push((Statement::Involution321, p(&[3, 2, 1]), p(&[3, -2, 1]), vec![AmbientSet::SI]));
    }
    if max_len >= 4 {
        out.push((Statement::Swap2143, p(&[-2, 1, -4, 3]), p(&[2, -1, -4, 3]), vec![AmbientSet::B]));
        out.push((Statement::Guibert, p(&[1, 2, 3, 4]), p(&[3, 4, 1, 2]), vec![AmbientSet::SI]));
        out.push((Statement::Guibert, p(&[1, 2, 3, 4]), p(&[4, 3, 2, 1]), vec![AmbientSet::SI]));
    }
    out
}

/// Checks every statement instance with patterns of length at most
/// `max_len` by comparing sequences up to `n_max`.
pub fn verify_theorem_suite(n_max: usize, max_len: usize, guard: CostGuard) -> Result<TheoremReport, WilfError> {
    let instances = theorem_instances(max_len);
    let mut jobs: Vec<(Pattern, AmbientSet)> = instances
        .iter()
        .flat_map(|(_, a, b, sets)| sets.iter().flat_map(move |&s| [(a.clone(), s), (b.clone(), s)]))
        .collect();
    jobs.sort();
    jobs.dedup();
    let per_set = |set| jobs.iter().filter(|j| j.1 == set).count();
    let estimate = estimate_cost(AmbientSet::B, n_max, per_set(AmbientSet::B))
        .saturating_add(estimate_cost(AmbientSet::SI, n_max, per_set(AmbientSet::SI)));
    guard.check(estimate)?;

    let cache: Mutex<HashMap<(Pattern, AmbientSet), Vec<u64>>> = Mutex::new(HashMap::new());
    jobs.par_iter().for_each(|(t, s)| {
        let counts = genenum::sequence(t, *s, n_max).counts;
        cache.lock().expect("cache lock").insert((t.clone(), *s), counts);
    });
    let cache = cache.into_inner().expect("cache lock");
    let mut out = Vec::new();
    for (statement, left, right, sets) in instances {
        for set in sets {
            let verdict = compare_counts(&cache[&(left.clone(), set)], &cache[&(right.clone(), set)]);
            out.push(TheoremInstance { statement, left: left.clone(), right: right.clone(), set, n_max, verdict });
        }
    }
    Ok(TheoremReport { n_max, instances: out })
}
