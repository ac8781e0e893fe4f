//! Case analysis of a pattern `π` by its left-to-right maxima, deciding which
//! construction describes the preimage of `Av(π)` under one bubble pass, and
//! the witness pairs that show the preimage is not a class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::bubble_splice;
use crate::perm::{Permutation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    /// `|π| = 1`: no permutation avoids `π`, so the preimage is empty.
    EmptyClass,
    /// `π = 12`: the preimage is `{1}`.
    SingletonClass,
    /// `π` starts with its maximum.
    OneLr,
    /// Two LR maxima, the second of which is the final entry.
    TwoLrEndsMax,
    /// Two LR maxima, not ending with the maximum.
    TwoLrGeneral,
    /// Three LR maxima, third final, something between the second and third.
    ThreeLrReducible,
    /// `π = (n-2) α (n-1) n`.
    ThreeLrSpecial,
    /// At least three LR maxima, the third not final.
    NotAClass,
}

impl Case {
    pub const ALL: [Case; 8] = [
        Case::EmptyClass,
        Case::SingletonClass,
        Case::OneLr,
        Case::TwoLrEndsMax,
        Case::TwoLrGeneral,
        Case::ThreeLrReducible,
        Case::ThreeLrSpecial,
        Case::NotAClass,
    ];

    pub fn is_good(self) -> bool {
        self != Case::NotAClass
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `π = a α b β c γ [n]` split at its first (up to) three LR maxima.
///
/// `trailing_max` is set when `π` ends with its maximum and that maximum is
/// not one of `a`, `b`, `c`; it is then excluded from the last gap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartDecomposition {
    pub a: u32,
    pub alpha: Word,
    pub b: Option<u32>,
    pub beta: Option<Word>,
    pub c: Option<u32>,
    pub gamma: Option<Word>,
    pub trailing_max: Option<u32>,
}

impl ThreePartDecomposition {
    fn of(p: &Permutation) -> Self {
        let v = p.values();
        let n = v.len();
        let maxima: Vec<usize> = p.lr_maxima_positions().into_iter().take(3).collect();
        let trailing = p.ends_with_max() && !maxima.contains(&(n - 1));
        let body_end = if trailing { n - 1 } else { n };
        let gap = |idx: usize| {
            let start = maxima[idx] + 1;
            let end = maxima.get(idx + 1).copied().unwrap_or(body_end);
            Word::new(v[start..end].to_vec()).expect("entries of a permutation are distinct")
        };
        ThreePartDecomposition {
            a: v[maxima[0]],
            alpha: gap(0),
            b: maxima.get(1).map(|&i| v[i]),
            beta: (maxima.len() > 1).then(|| gap(1)),
            c: maxima.get(2).map(|&i| v[i]),
            gamma: (maxima.len() > 2).then(|| gap(2)),
            trailing_max: trailing.then(|| v[n - 1]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub pattern: Permutation,
    pub case: Case,
    /// 1-based positions of every LR maximum.
    pub lr_maxima_positions: Vec<usize>,
    pub decomposition: Option<ThreePartDecomposition>,
    /// The shorter pattern with the same preimage class, for the two
    /// reducible cases.
    pub reduced: Option<Permutation>,
    pub good: bool,
}

pub fn classify(p: &Permutation) -> Result<Classification> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let positions = p.lr_maxima_positions();
    let n = p.len();
    let last_is_max = p.ends_with_max();
    let strip_last = || Permutation::from_vec_unchecked(p.values()[..n - 1].to_vec());

    let (case, reduced) = if n == 1 {
        (Case::EmptyClass, None)
    } else if p.values() == [1, 2] {
        (Case::SingletonClass, None)
    } else {
        match positions.len() {
            1 => (Case::OneLr, None),
            2 if last_is_max => (Case::TwoLrEndsMax, Some(strip_last())),
            2 => (Case::TwoLrGeneral, None),
            3 if positions[2] == n - 1 => {
                if positions[2] == positions[1] + 1 {
                    (Case::ThreeLrSpecial, None)
                } else {
                    (Case::ThreeLrReducible, Some(strip_last()))
                }
            }
            _ => (Case::NotAClass, None),
        }
    };

    let decomposition = match case {
        Case::EmptyClass | Case::SingletonClass => None,
        _ => Some(ThreePartDecomposition::of(p)),
    };

    Ok(Classification {
        pattern: p.clone(),
        case,
        lr_maxima_positions: positions.into_iter().map(|i| i + 1).collect(),
        decomposition,
        reduced,
        good: case.is_good(),
    })
}

/// `π` followed by `n + 1`. Only meaningful when `π` does not already end
/// with its maximum, since then both patterns have the same preimage class.
pub fn append_max(p: &Permutation) -> Result<Permutation> {
    if p.ends_with_max() {
        return Err(Error::EndsWithMax(p.clone()));
    }
    Ok(p.with_max_appended())
}

/// `θ₁ ⪯ θ₂` with `π ⪯ B(θ₁)` but `π ⋠ B(θ₂)`: the preimage of `Av(π)`
/// holds `θ₂` and misses `θ₁`, so it is not closed downward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessPair {
    pub theta1: Permutation,
    pub theta2: Permutation,
}

impl WitnessPair {
    /// Checks every defining property against `pattern`.
    pub fn verify(&self, pattern: &Permutation) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::InvalidWitness {
                pattern: pattern.clone(),
                reason: reason.to_string(),
            })
        };
        if !self.theta2.contains(&self.theta1) {
            return fail("theta1 is not contained in theta2");
        }
        if !bubble_splice(&self.theta1).contains(pattern) {
            return fail("B(theta1) avoids the pattern");
        }
        if bubble_splice(&self.theta2).contains(pattern) {
            return fail("B(theta2) contains the pattern");
        }
        Ok(())
    }
}

/// Builds `θ₁ = b a α n β c γ` and `θ₂ = (n+1) θ₁` from `π` written as
/// `a α b β c γ n` (after appending a maximum if `π` lacks a final one).
pub fn witness_pair(p: &Permutation) -> Result<WitnessPair> {
    let class = classify(p)?;
    if class.case != Case::NotAClass {
        return Err(Error::IsGoodPermutation(p.clone()));
    }
    let normalized = if p.ends_with_max() { p.clone() } else { append_max(p)? };
    let v = normalized.values();
    let n = v.len();
    let pos = normalized.lr_maxima_positions();
    let (pa, pb, pc) = (pos[0], pos[1], pos[2]);

    let mut theta1 = Vec::with_capacity(n);
    theta1.push(v[pb]);
    theta1.push(v[pa]);
    theta1.extend_from_slice(&v[pa + 1..pb]);
    theta1.push(v[n - 1]);
    theta1.extend_from_slice(&v[pb + 1..pc]);
    theta1.push(v[pc]);
    theta1.extend_from_slice(&v[pc + 1..n - 1]);

    let theta1 = Permutation::from_vec_unchecked(theta1);
    let pair = WitnessPair {
        theta2: theta1.with_max_prepended(),
        theta1,
    };
    pair.verify(p)?;
    Ok(pair)
}
