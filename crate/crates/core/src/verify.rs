//! Exhaustive property checks for the sign-toggling bijections.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::bijections::{phi_prefix, psi_prefix, psi_swap, varphi};
use crate::genenum::{self, AmbientSet};
use crate::maxima::rtl_decomposition;
use crate::perm::{Entry, Pattern, SignedPermutation};
use crate::symmetry::bar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    /// Bar-prefix map for increasing suffixes.
    Phi,
    /// Bar-prefix map for decreasing suffixes.
    Psi,
    /// Middle-toggle map for `321` in signed involutions.
    Varphi,
    /// Toggle map for `2̄14̄3` and `21̄4̄3`.
    Psi2143,
}

impl FromStr for Bijection {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "phi" => Ok(Bijection::Phi),
            "psi" => Ok(Bijection::Psi),
            "varphi" => Ok(Bijection::Varphi),
            "psi2143" => Ok(Bijection::Psi2143),
            other => Err(VerifyError::UnknownBijection(other.to_string())),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bijection::Phi => "phi",
            Bijection::Psi => "psi",
            Bijection::Varphi => "varphi",
            Bijection::Psi2143 => "psi2143",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown bijection {0:?}, expected phi, psi, varphi or psi2143")]
    UnknownBijection(String),
    #[error("--r must be at least 1")]
    ZeroLevel,
    #[error("pattern {0} does not have the shape (k+2) tau 1 required by varphi")]
    BadShape(String),
    #[error("--pattern is not used by {0}")]
    PatternNotApplicable(Bijection),
}

/// Outcome of one property over all inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: String,
    /// Number of (input, instance) pairs checked.
    pub checked: u64,
    /// First failing input in enumeration order, with detail.
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Avoider-transport instance: `π` avoids `left` iff `map(π)` avoids `right`.
#[derive(Debug, Clone)]
pub struct Transport {
    pub left: Pattern,
    pub right: Pattern,
    /// Inputs the statement ranges over.
    pub set: AmbientSet,
}

type Check = Box<dyn Fn(&SignedPermutation, &SignedPermutation) -> Option<bool> + Sync>;

struct Property {
    name: String,
    // None = not applicable to this input
    check: Check,
}

fn with_suffix(prefix: &[Entry], suffix: impl IntoIterator<Item = Entry>) -> Pattern {
    let mut v = prefix.to_vec();
    v.extend(suffix);
    Pattern::from_entries(v).expect("valid instance")
}

/// Prefix patterns `τ ∈ B_l` with `1 <= l` and `l + r <= max_len`.
fn prefixes(r: usize, max_len: usize, given: Option<&Pattern>) -> Vec<SignedPermutation> {
    match given {
        Some(p) => vec![p.word().clone()],
        None => (1..=max_len.saturating_sub(r))
            .flat_map(|l| genenum::enumerate(l, AmbientSet::B))
            .collect(),
    }
}

/// Transport instances exercised by default (pattern lengths up to `max_len`).
pub fn transports(b: Bijection, r: usize, pattern: Option<&Pattern>, max_len: usize) -> Result<Vec<Transport>, VerifyError> {
    let mut out = Vec::new();
    match b {
        Bijection::Phi | Bijection::Psi => {
            for tau in prefixes(r, max_len, pattern) {
                let l = tau.len() as Entry;
                let (lo, hi) = (l + 1, l + r as Entry);
                let barred = bar(&tau);
                let (left, right) = if b == Bijection::Phi {
                    (with_suffix(tau.entries(), lo..=hi), with_suffix(barred.entries(), lo..=hi))
                } else {
                    (with_suffix(tau.entries(), (lo..=hi).rev()), with_suffix(barred.entries(), (lo..=hi).rev()))
                };
                out.push(Transport { left, right, set: AmbientSet::B });
            }
        }
        Bijection::Varphi => {
            let shapes: Vec<Pattern> = match pattern {
                Some(p) => {
                    let e = p.entries();
                    let k = e.len();
                    if k < 3 || e[0] != k as Entry || e[k - 1] != 1 {
                        return Err(VerifyError::BadShape(p.text()));
                    }
                    vec![p.clone()]
                }
                None => (1..=max_len.saturating_sub(2))
                    .flat_map(|k| {
                        genenum::enumerate(k, AmbientSet::B).map(move |mid| {
                            let top = k as Entry + 2;
                            let mut v = vec![top];
                            v.extend(mid.entries().iter().map(|&x| if x > 0 { x + 1 } else { x - 1 }));
                            v.push(1);
                            Pattern::from_entries(v).expect("valid instance")
                        })
                    })
                    .collect(),
            };
            for left in shapes {
                let e = left.entries();
                let k = e.len();
                let mut v = e.to_vec();
                for x in &mut v[1..k - 1] {
                    *x = -*x;
                }
                let right = Pattern::from_entries(v).expect("valid instance");
                out.push(Transport { left, right, set: AmbientSet::SI });
            }
        }
        Bijection::Psi2143 => {
            if pattern.is_some() {
                return Err(VerifyError::PatternNotApplicable(b));
            }
            out.push(Transport {
                left: Pattern::parse("-2,1,-4,3").expect("literal"),
                right: Pattern::parse("2,-1,-4,3").expect("literal"),
                set: AmbientSet::B,
            });
        }
    }
    Ok(out)
}

fn apply(b: Bijection, r: usize, pi: &SignedPermutation) -> SignedPermutation {
    match b {
        Bijection::Phi => phi_prefix(pi, r),
        Bijection::Psi => psi_prefix(pi, r),
        Bijection::Varphi => varphi(pi),
        Bijection::Psi2143 => psi_swap(pi),
    }
}

fn properties(b: Bijection, r: usize, transports: Vec<Transport>, with_si: bool) -> Vec<Property> {
    let mut props = vec![
        Property {
            name: "involutivity".into(),
            check: Box::new(move |pi, sigma| Some(apply(b, r, sigma) == *pi)),
        },
        Property {
            name: "absolute values preserved".into(),
            check: Box::new(|pi, sigma| Some(pi.abs() == sigma.abs())),
        },
    ];
    match b {
        Bijection::Phi => props.push(Property {
            name: format!("levels 1..={r} of right-to-left maxima preserved"),
            check: Box::new(move |pi, sigma| {
                let (a, s) = (rtl_decomposition(pi), rtl_decomposition(sigma));
                Some((1..=r).all(|q| a.level(q) == s.level(q)))
            }),
        }),
        Bijection::Psi => props.push(Property {
            name: "first-level right-to-left maxima preserved".into(),
            check: Box::new(|pi, sigma| Some(rtl_decomposition(pi).level(1) == rtl_decomposition(sigma).level(1))),
        }),
        _ => {}
    }
    if with_si {
        props.push(Property {
            name: "signed involutions map to signed involutions".into(),
            check: Box::new(|pi, sigma| pi.is_signed_involution().then(|| sigma.is_signed_involution())),
        });
    }
    for t in transports {
        let restrict = t.set == AmbientSet::SI;
        props.push(Property {
            name: format!("avoids {} <=> image avoids {} (over {})", t.left, t.right, t.set),
            check: Box::new(move |pi, sigma| {
                if restrict && !pi.is_signed_involution() {
                    return None;
                }
                Some(pi.avoids(&t.left) == sigma.avoids(&t.right))
            }),
        });
    }
    props
}

/// True for maps that send signed involutions to signed involutions.
pub fn preserves_involutions(b: Bijection) -> bool {
    !matches!(b, Bijection::Psi2143)
}

/// Runs every property of `b` over all of `B_m` for `m <= n`.
///
/// `r` is the level for `phi`/`psi` (default 1). `pattern` selects one
/// transport instance: the prefix `τ` for `phi`/`psi`, or a full
/// `(k+2) τ 1` pattern for `varphi`.
pub fn run_suite(b: Bijection, n: usize, r: Option<usize>, pattern: Option<&Pattern>) -> Result<Vec<PropertyOutcome>, VerifyError> {
    let r = r.unwrap_or(1);
    if r == 0 {
        return Err(VerifyError::ZeroLevel);
    }
    let transports = transports(b, r, pattern, 4)?;
    let props = properties(b, r, transports, preserves_involutions(b));
    let mut outcomes: Vec<PropertyOutcome> = props
        .iter()
        .map(|p| PropertyOutcome { name: p.name.clone(), checked: 0, counterexample: None })
        .collect();

    const CHUNK: usize = 1 << 15;
    for m in 0..=n {
        let mut perms = genenum::enumerate(m, AmbientSet::B).peekable();
        while perms.peek().is_some() {
            let chunk: Vec<SignedPermutation> = perms.by_ref().take(CHUNK).collect();
            let results: Vec<Vec<Option<bool>>> = chunk
                .par_iter()
                .map(|pi| {
                    let sigma = apply(b, r, pi);
                    props.iter().map(|p| (p.check)(pi, &sigma)).collect()
                })
                .collect();
            for (pi, res) in chunk.iter().zip(&results) {
                for (out, verdict) in outcomes.iter_mut().zip(res) {
                    match verdict {
                        Some(true) => out.checked += 1,
                        Some(false) => {
                            out.checked += 1;
                            if out.counterexample.is_none() {
                                out.counterexample = Some(format!("pi = {pi}, image = {}", apply(b, r, pi)));
                            }
                        }
                        None => {}
                    }
                }
            }
        }
    }
    Ok(outcomes)
}
