//! The bubble pass `B`, West's stack pass `S`, and finite compositions of them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Reference definition: `B(σ₁ m σ₂) = B(σ₁) σ₂ m` with `m` the maximum.
pub fn bubble_recursive(p: &Permutation) -> Permutation {
    let mut out = Vec::with_capacity(p.len());
    bubble_word_recursive(p.values(), &mut out);
    Permutation::from_vec_unchecked(out)
}

fn bubble_word_recursive(word: &[u32], out: &mut Vec<u32>) {
    let Some((max_pos, &max)) = word.iter().enumerate().max_by_key(|&(_, v)| *v) else {
        return;
    };
    bubble_word_recursive(&word[..max_pos], out);
    out.extend_from_slice(&word[max_pos + 1..]);
    out.push(max);
}

/// One scan: each left-to-right maximum is moved to the end of the gap that
/// follows it, so `n₁λ₁…n_kλ_k` becomes `λ₁n₁…λ_kn_k`.
pub fn bubble_splice(p: &Permutation) -> Permutation {
    Permutation::from_vec_unchecked(bubble_slice(p.values()))
}

pub(crate) fn bubble_slice(values: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(values.len());
    let mut carried: Option<u32> = None;
    for &v in values {
        match carried {
            Some(c) if v < c => out.push(v),
            Some(c) => {
                out.push(c);
                carried = Some(v);
            }
            None => carried = Some(v),
        }
    }
    out.extend(carried);
    out
}

/// `B` applied `k` times; `k = 0` is the identity.
pub fn bubble_k(p: &Permutation, k: usize) -> Permutation {
    let mut current = p.values().to_vec();
    for _ in 0..k {
        current = bubble_slice(&current);
    }
    Permutation::from_vec_unchecked(current)
}

/// West's stack pass `S(αnβ) = S(α) S(β) n`, computed by pushing through a
/// stack that pops whenever a larger entry arrives.
pub fn stack_pass(p: &Permutation) -> Permutation {
    let mut out = Vec::with_capacity(p.len());
    let mut stack: Vec<u32> = Vec::with_capacity(p.len());
    for &v in p.values() {
        while stack.last().is_some_and(|&top| top < v) {
            out.push(stack.pop().unwrap());
        }
        stack.push(v);
    }
    out.extend(stack.into_iter().rev());
    Permutation::from_vec_unchecked(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Operator {
    BubblePass,
    StackPass,
}

impl Operator {
    pub fn apply(self, p: &Permutation) -> Permutation {
        match self {
            Operator::BubblePass => bubble_splice(p),
            Operator::StackPass => stack_pass(p),
        }
    }

    fn letter(self) -> char {
        match self {
            Operator::BubblePass => 'B',
            Operator::StackPass => 'S',
        }
    }
}

/// A composition of operators written as in function composition: `SB`
/// applies `B` first, then `S`. `B^k` abbreviates `k` consecutive `B`s.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorChain {
    /// In written order (leftmost is applied last).
    steps: Vec<Operator>,
}

impl OperatorChain {
    pub fn new(steps: Vec<Operator>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::MalformedChain {
                chain: String::new(),
                reason: "chain is empty".into(),
            });
        }
        Ok(OperatorChain { steps })
    }

    pub fn bubble_power(k: usize) -> Result<Self> {
        OperatorChain::new(vec![Operator::BubblePass; k])
    }

    pub fn steps(&self) -> &[Operator] {
        &self.steps
    }

    /// Steps in the order they are applied.
    pub fn application_order(&self) -> impl Iterator<Item = Operator> + '_ {
        self.steps.iter().rev().copied()
    }

    pub fn apply(&self, p: &Permutation) -> Permutation {
        self.application_order().fold(p.clone(), |acc, op| op.apply(&acc))
    }

    /// Every intermediate image, starting with `p` itself.
    pub fn trace(&self, p: &Permutation) -> Vec<(Option<Operator>, Permutation)> {
        let mut out = vec![(None, p.clone())];
        for op in self.application_order() {
            let next = op.apply(&out.last().unwrap().1);
            out.push((Some(op), next));
        }
        out
    }
}

pub fn apply_chain(p: &Permutation, chain: &OperatorChain) -> Permutation {
    chain.apply(p)
}

impl FromStr for OperatorChain {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedChain {
            chain: text.to_string(),
            reason,
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut steps = Vec::new();
        let mut chars = compact.chars().peekable();
        while let Some(c) = chars.next() {
            let op = match c.to_ascii_uppercase() {
                'B' => Operator::BubblePass,
                'S' => Operator::StackPass,
                other => return Err(malformed(format!("unexpected character {other:?}"))),
            };
            let mut power = 1usize;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                power = digits
                    .parse()
                    .map_err(|_| malformed(format!("missing exponent after {op:?}^")))?;
            }
            steps.extend(std::iter::repeat_n(op, power));
        }
        OperatorChain::new(steps).map_err(|_| malformed("chain is empty".into()))
    }
}

impl fmt::Display for OperatorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.steps.len() {
            let op = self.steps[i];
            let run = self.steps[i..].iter().take_while(|&&s| s == op).count();
            write!(f, "{}", op.letter())?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl Serialize for OperatorChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for OperatorChain {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
