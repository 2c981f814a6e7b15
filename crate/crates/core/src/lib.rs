//! Pattern avoidance for signed permutations.
//!
//! Exact avoider counting in the hyperoctahedral group `B_n` and in the set
//! of signed involutions `SI_n`, the sign-toggling bijections behind the
//! nontrivial equivalences among short signed patterns, symmetry-class
//! reduction and a Wilf-classification driver.

pub mod bijections;
pub mod genenum;
pub mod maxima;
pub mod perm;
pub mod report;
pub mod symmetry;
pub mod tables;
pub mod verify;
pub mod wilf;

pub use genenum::{count_avoiders, enumerate, sequence, AmbientSet, AvoidanceSequence};
pub use perm::{avoids, contains, parse_pattern, Entry, Pattern, PermError, PrefixWord, SignedPermutation};
pub use symmetry::{SymmetryClass, SymmetryMode};
pub use wilf::{classify, ClassificationReport, CostGuard, Verdict, WilfClass, WilfError};
