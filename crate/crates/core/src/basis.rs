//! Explicit bases for `B⁻¹(Av(π))` when `π` is good, and for intersections
//! over sets of good patterns.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::classification::{classify, witness_pair, Case, Classification, WitnessPair};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::perm::{minimal_elements, standardize_distinct, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    BeforeA,
    AfterA,
}

/// One member of the extension set `R(π)` for `π = a α b μ` with two LR
/// maxima `a < b` and `μ` non-empty.
///
/// The realized word is `a x α₁ y α₂ z μ` or `x a α₁ y α₂ z μ` where `z`
/// stands in for `b`, `x > a`, and `{y, z}` are the two largest values. When
/// `coalesced`, `x` and `y` are a single point adjacent to `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RExtension {
    pub x_side: Side,
    /// Value of `x` in the realized permutation.
    pub x_value_rank: usize,
    /// Number of `α` entries placed before `y`.
    pub y_gap_index: usize,
    pub y_above_z: bool,
    pub coalesced: bool,
}

struct TwoLrShape<'a> {
    a: u32,
    alpha: &'a [u32],
    mu: &'a [u32],
    n: usize,
}

fn two_lr_shape<'a>(p: &'a Permutation, operation: &'static str) -> Result<TwoLrShape<'a>> {
    let positions = p.lr_maxima_positions();
    let wrong = |reason: &str| Error::WrongCase {
        operation,
        permutation: p.clone(),
        reason: reason.to_string(),
    };
    if positions.len() != 2 {
        return Err(wrong("needs exactly two left-to-right maxima"));
    }
    if p.ends_with_max() {
        return Err(wrong("must not end with its maximum"));
    }
    let v = p.values();
    Ok(TwoLrShape {
        a: v[0],
        alpha: &v[1..positions[1]],
        mu: &v[positions[1] + 1..],
        n: v.len(),
    })
}

impl RExtension {
    /// Every descriptor admitted for `p`.
    pub fn enumerate(p: &Permutation) -> Result<Vec<RExtension>> {
        let shape = two_lr_shape(p, "extension_set")?;
        let n = shape.n;
        let mut out = Vec::new();
        for x_side in [Side::BeforeA, Side::AfterA] {
            for below_x in shape.a as usize..n {
                for y_gap_index in 0..=shape.alpha.len() {
                    // With x right after a and nothing of α in between, x and y
                    // must be the same point.
                    if x_side == Side::AfterA && y_gap_index == 0 {
                        continue;
                    }
                    for y_above_z in [true, false] {
                        out.push(RExtension {
                            x_side,
                            x_value_rank: below_x + 1,
                            y_gap_index,
                            y_above_z,
                            coalesced: false,
                        });
                    }
                }
            }
            for y_above_z in [true, false] {
                out.push(RExtension {
                    x_side,
                    x_value_rank: if y_above_z { n + 1 } else { n },
                    y_gap_index: 0,
                    y_above_z,
                    coalesced: true,
                });
            }
        }
        Ok(out)
    }

    pub fn realize(&self, p: &Permutation) -> Result<Permutation> {
        let shape = two_lr_shape(p, "extension_set")?;
        // Scale so the new points fit strictly between existing values.
        let n = shape.n as u32;
        let scale = |v: u32| 4 * v;
        let (top, second) = (4 * n + 8, 4 * n + 4);
        let (y, z) = if self.y_above_z { (top, second) } else { (second, top) };
        let a = scale(shape.a);

        let mut word = Vec::with_capacity(shape.n + 2);
        if self.coalesced {
            match self.x_side {
                Side::BeforeA => word.extend([y, a]),
                Side::AfterA => word.extend([a, y]),
            }
            word.extend(shape.alpha.iter().map(|&v| scale(v)));
        } else {
            let x = 4 * (self.x_value_rank as u32 - 1) + 2;
            match self.x_side {
                Side::BeforeA => word.extend([x, a]),
                Side::AfterA => word.extend([a, x]),
            }
            let (alpha1, alpha2) = shape.alpha.split_at(self.y_gap_index);
            word.extend(alpha1.iter().map(|&v| scale(v)));
            word.push(y);
            word.extend(alpha2.iter().map(|&v| scale(v)));
        }
        word.push(z);
        word.extend(shape.mu.iter().map(|&v| scale(v)));
        Ok(standardize_distinct(&word))
    }

    pub fn realized_len(&self, p: &Permutation) -> usize {
        if self.coalesced {
            p.len() + 1
        } else {
            p.len() + 2
        }
    }
}

/// `R(π)`: every realized extension, deduplicated.
pub fn extension_set(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    RExtension::enumerate(p)?
        .iter()
        .map(|ext| ext.realize(p))
        .collect()
}

/// `π = n α` with a single LR maximum: `{n (n+1) α, (n+1) n α}`.
pub fn basis_one_lr(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    if p.len() < 2 || p.lr_maxima_positions().len() != 1 {
        return Err(Error::WrongCase {
            operation: "basis_one_lr",
            permutation: p.clone(),
            reason: "needs length at least 2 and a single left-to-right maximum".into(),
        });
    }
    let n = p.len() as u32;
    let alpha = &p.values()[1..];
    let build = |first: u32, second: u32| {
        let mut values = vec![first, second];
        values.extend_from_slice(alpha);
        Permutation::from_vec_unchecked(values)
    };
    Ok(BTreeSet::from([build(n, n + 1), build(n + 1, n)]))
}

/// Minimal elements of `R(π)` for two LR maxima not ending in the maximum.
pub fn basis_two_lr(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    Ok(minimal_elements(&extension_set(p)?))
}

/// `π = (n-2) α (n-1) n`: the four same-length rearrangements that put `n-1`
/// or `n` beside `n-2` at the front.
pub fn basis_special_three(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    let case = classify(p)?.case;
    if case != Case::ThreeLrSpecial {
        return Err(Error::WrongCase {
            operation: "basis_special_three",
            permutation: p.clone(),
            reason: format!("classified as {case}"),
        });
    }
    let n = p.len() as u32;
    let alpha = &p.values()[1..p.len() - 2];
    let build = |front: [u32; 2], last: u32| {
        let mut values = front.to_vec();
        values.extend_from_slice(alpha);
        values.push(last);
        Permutation::from_vec_unchecked(values)
    };
    Ok(BTreeSet::from([
        build([n - 2, n - 1], n),
        build([n - 1, n - 2], n),
        build([n - 2, n], n - 1),
        build([n, n - 2], n - 1),
    ]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Basis,
    NotAClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisResult {
    pub outcome: Outcome,
    pub basis: BTreeSet<Permutation>,
    pub witness: Option<WitnessPair>,
    /// Absent for multi-pattern results.
    pub case_used: Option<Classification>,
    pub cross_checked: bool,
}

/// When to compare a constructed basis with the exhaustive oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CrossCheck {
    /// At length `|π| + 3` for `|π| ≤ 5`, skipped above.
    #[default]
    Auto,
    Off,
    Horizon(usize),
}

impl CrossCheck {
    fn horizon(self, pattern_len: usize) -> Option<usize> {
        match self {
            CrossCheck::Auto if pattern_len <= 5 => Some(pattern_len + 3),
            CrossCheck::Auto | CrossCheck::Off => None,
            CrossCheck::Horizon(h) => Some(h),
        }
    }
}

fn basis_for_case(class: &Classification) -> Result<BTreeSet<Permutation>> {
    let p = &class.pattern;
    match class.case {
        Case::EmptyClass => Ok(BTreeSet::from([Permutation::identity(1)])),
        Case::SingletonClass => Ok(BTreeSet::from([
            Permutation::identity(2),
            Permutation::from_vec_unchecked(vec![2, 1]),
        ])),
        Case::OneLr => basis_one_lr(p),
        Case::TwoLrEndsMax => basis_one_lr(class.reduced.as_ref().expect("reduced is set")),
        Case::TwoLrGeneral => basis_two_lr(p),
        Case::ThreeLrReducible => {
            let reduced = classify(class.reduced.as_ref().expect("reduced is set"))?;
            basis_for_case(&reduced)
        }
        Case::ThreeLrSpecial => basis_special_three(p),
        Case::NotAClass => unreachable!("handled by witness construction"),
    }
}

/// Basis of `B⁻¹(Av(π))`, or a witness pair when it is not a class.
pub fn inverse_basis(p: &Permutation) -> Result<BasisResult> {
    let class = classify(p)?;
    if class.case == Case::NotAClass {
        return Ok(BasisResult {
            outcome: Outcome::NotAClass,
            basis: BTreeSet::new(),
            witness: Some(witness_pair(p)?),
            case_used: Some(class),
            cross_checked: false,
        });
    }
    Ok(BasisResult {
        outcome: Outcome::Basis,
        basis: basis_for_case(&class)?,
        witness: None,
        case_used: Some(class),
        cross_checked: false,
    })
}

/// [`inverse_basis`] followed by the oracle comparison selected by `check`.
pub fn inverse_basis_checked(p: &Permutation, check: CrossCheck, oracle: &Oracle) -> Result<BasisResult> {
    let mut result = inverse_basis(p)?;
    let Some(horizon) = check.horizon(p.len()) else {
        return Ok(result);
    };
    match result.outcome {
        Outcome::Basis => {
            compare_with_oracle(p, &result.basis, &BTreeSet::from([p.clone()]), horizon, oracle)?;
            result.cross_checked = true;
        }
        Outcome::NotAClass => {
            let report = oracle.downset_check(p, horizon)?;
            let witness = result.witness.as_ref().expect("witness is set");
            if !report.is_downset {
                result.cross_checked = true;
            } else if witness.theta2.len() <= horizon {
                return Err(Error::InvalidWitness {
                    pattern: p.clone(),
                    reason: format!("oracle finds no downset violation up to length {horizon}"),
                });
            }
        }
    }
    Ok(result)
}

fn compare_with_oracle(
    label: &Permutation,
    constructed: &BTreeSet<Permutation>,
    patterns: &BTreeSet<Permutation>,
    horizon: usize,
    oracle: &Oracle,
) -> Result<()> {
    let empirical = oracle.empirical_set_basis(patterns, horizon)?;
    let visible: BTreeSet<Permutation> =
        constructed.iter().filter(|b| b.len() <= horizon).cloned().collect();
    if visible != empirical {
        return Err(Error::CrossCheckMismatch {
            pattern: label.clone(),
            horizon,
            constructed: visible.into_iter().collect(),
            empirical: empirical.into_iter().collect(),
        });
    }
    Ok(())
}

/// Basis of `B⁻¹(Av(Π))` for a set of good patterns: the minimal elements of
/// the union of the individual bases.
pub fn inverse_basis_set(patterns: &BTreeSet<Permutation>) -> Result<BasisResult> {
    let classes = patterns.iter().map(classify).collect::<Result<Vec<_>>>()?;
    if let Some(bad) = classes.iter().find(|c| !c.good) {
        return Err(Error::ContainsBadPermutation(bad.pattern.clone()));
    }
    let mut union = BTreeSet::new();
    for class in &classes {
        union.extend(basis_for_case(class)?);
    }
    let case_used = match <[Classification; 1]>::try_from(classes) {
        Ok([single]) => Some(single),
        Err(_) => None,
    };
    Ok(BasisResult {
        outcome: Outcome::Basis,
        basis: minimal_elements(&union),
        witness: None,
        case_used,
        cross_checked: false,
    })
}

pub fn inverse_basis_set_checked(
    patterns: &BTreeSet<Permutation>,
    check: CrossCheck,
    oracle: &Oracle,
) -> Result<BasisResult> {
    let mut result = inverse_basis_set(patterns)?;
    let longest = patterns.iter().map(Permutation::len).max().unwrap_or(0);
    if let (Some(horizon), Some(label)) = (check.horizon(longest), patterns.iter().next_back()) {
        compare_with_oracle(label, &result.basis, patterns, horizon, oracle)?;
        result.cross_checked = true;
    }
    Ok(result)
}
