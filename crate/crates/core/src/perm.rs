//! Permutations in one-line notation and the subpermutation order.
//!
//! A [`Permutation`] of length `n` holds each of `1..=n` exactly once. The
//! empty permutation is allowed everywhere. Sequences of distinct values that
//! are not yet on `1..=n` are carried as [`Word`]s and brought back with
//! [`standardize`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection on `{1, …, n}` written in one-line notation.
///
/// Ordering is by length first and lexicographic within a length, so sets of
/// permutations print shortest first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates `values` as a bijection on `1..=values.len()`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 || v as usize > len {
                return Err(Error::OutOfRange { value: v, len });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue { value: v });
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees the bijection invariant.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// True when the last entry is `n` (vacuously false for the empty permutation).
    pub fn ends_with_max(&self) -> bool {
        self.0.last().is_some_and(|&v| v as usize == self.len())
    }

    /// True iff some subsequence of `self` is order isomorphic to `needle`.
    pub fn contains(&self, needle: &Permutation) -> bool {
        contains(self, needle)
    }

    /// 0-based positions of the left-to-right maxima.
    pub fn lr_maxima_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut best = 0;
        for (i, &v) in self.0.iter().enumerate() {
            if v > best {
                best = v;
                out.push(i);
            }
        }
        out
    }

    /// Remove the entry at 0-based `index` and standardize.
    pub fn delete_at(&self, index: usize) -> Permutation {
        let removed = self.0[index];
        let values = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation(values)
    }

    /// Append a new last entry with value `value` (in `1..=n+1`), shifting
    /// entries `>= value` up by one.
    pub fn extend_right(&self, value: u32) -> Permutation {
        debug_assert!(value >= 1 && value as usize <= self.len() + 1);
        let mut values: Vec<u32> = self
            .0
            .iter()
            .map(|&v| if v >= value { v + 1 } else { v })
            .collect();
        values.push(value);
        Permutation(values)
    }

    /// `self` followed by `n + 1`.
    pub fn with_max_appended(&self) -> Permutation {
        let mut values = self.0.clone();
        values.push(self.len() as u32 + 1);
        Permutation(values)
    }

    /// `n + 1` followed by `self`.
    pub fn with_max_prepended(&self) -> Permutation {
        let mut values = Vec::with_capacity(self.len() + 1);
        values.push(self.len() as u32 + 1);
        values.extend_from_slice(&self.0);
        Permutation(values)
    }

    /// Position of this permutation in the lexicographic listing of `S_n`.
    pub fn lex_rank(&self) -> usize {
        let n = self.len();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller_after = self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count();
            rank = rank * (n - i) + smaller_after;
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`]. `rank` must be below `n!`.
    pub fn from_lex_rank(n: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u32> = (1..=n as u32).collect();
        let values = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation(values)
    }

    /// Advance in place to the lexicographic successor. Returns false (and
    /// leaves `self` unchanged) at the last permutation.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.0;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        true
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // The empty permutation serializes as "" so that it parses back.
        if self.is_empty() {
            return serializer.serialize_str("");
        }
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        if text.trim().is_empty() || text.trim() == "ε" {
            return Ok(Permutation::empty());
        }
        parse_permutation(&text).map_err(serde::de::Error::custom)
    }
}

/// A sequence of pairwise distinct values, not necessarily on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateValue { value: w[0] });
        }
        Ok(Word(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn standardize(&self) -> Permutation {
        standardize_distinct(&self.0)
    }
}

/// The permutation order isomorphic to `values`.
pub fn standardize(values: &[u32]) -> Result<Permutation> {
    Word::new(values.to_vec()).map(|w| w.standardize())
}

pub(crate) fn standardize_distinct(values: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut ranks = vec![0u32; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        ranks[i] = rank as u32 + 1;
    }
    Permutation(ranks)
}

/// Parse one-line notation: whitespace- or comma-separated integers, or a
/// single run of digits when every value is at most 9.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let tokens: Vec<(usize, &str)> = tokenize(text);
    if tokens.is_empty() {
        return Err(Error::EmptyTokenStream);
    }
    let values: Vec<u32> = if tokens.len() == 1 && tokens[0].1.len() > 1 {
        let (start, token) = tokens[0];
        token
            .char_indices()
            .map(|(offset, c)| {
                c.to_digit(10).ok_or_else(|| Error::MalformedToken {
                    token: c.to_string(),
                    position: start + offset,
                })
            })
            .collect::<Result<_>>()?
    } else {
        tokens
            .iter()
            .map(|&(position, token)| {
                token.parse::<u32>().map_err(|_| Error::MalformedToken {
                    token: token.to_string(),
                    position,
                })
            })
            .collect::<Result<_>>()?
    };
    Permutation::new(values)
}

fn tokenize(text: &str) -> Vec<(usize, &str)> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        let separator = c.is_whitespace() || c == ',';
        match (separator, start) {
            (true, Some(s)) => {
                tokens.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        tokens.push((s, &text[s..]));
    }
    tokens
}

/// A needle prepared for repeated containment queries.
///
/// Matching proceeds left to right through the needle. Each needle entry is
/// confined to the value window between the images of its nearest
/// already-placed neighbours in value order.
#[derive(Clone, Debug)]
pub struct PatternMatcher {
    needle: Vec<u32>,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl PatternMatcher {
    pub fn new(needle: &Permutation) -> Self {
        let k = needle.len();
        let v = needle.values();
        let mut below = Vec::with_capacity(k);
        let mut above = Vec::with_capacity(k);
        for i in 0..k {
            below.push((0..i).filter(|&j| v[j] < v[i]).max_by_key(|&j| v[j]));
            above.push((0..i).filter(|&j| v[j] > v[i]).min_by_key(|&j| v[j]));
        }
        PatternMatcher {
            needle: v.to_vec(),
            below,
            above,
        }
    }

    pub fn needle_len(&self) -> usize {
        self.needle.len()
    }

    pub fn is_contained_in(&self, haystack: &[u32]) -> bool {
        self.search_from(haystack, false)
    }

    /// Only occurrences that use the last entry of `haystack`.
    pub fn is_contained_using_last(&self, haystack: &[u32]) -> bool {
        self.search_from(haystack, true)
    }

    fn search_from(&self, haystack: &[u32], anchor_last: bool) -> bool {
        let k = self.needle.len();
        if k == 0 {
            return !anchor_last;
        }
        if k > haystack.len() {
            return false;
        }
        let mut images = vec![0u32; k];
        self.search(haystack, 0, 0, anchor_last, &mut images)
    }

    fn search(&self, hay: &[u32], i: usize, start: usize, anchor: bool, images: &mut [u32]) -> bool {
        let k = self.needle.len();
        if i == k {
            return true;
        }
        let lo = self.below[i].map_or(0, |j| images[j]);
        let hi = self.above[i].map_or(u32::MAX, |j| images[j]);
        let n = hay.len();
        let (first, last) = if anchor && i == k - 1 {
            (n - 1, n - 1)
        } else {
            (start, n - (k - i))
        };
        if first > last || first < start {
            return false;
        }
        for pos in first..=last {
            let v = hay[pos];
            if v > lo && v < hi {
                images[i] = v;
                if self.search(hay, i + 1, pos + 1, anchor, images) {
                    return true;
                }
            }
        }
        false
    }
}

/// True iff some subsequence of `haystack` standardizes to `needle`.
pub fn contains(haystack: &Permutation, needle: &Permutation) -> bool {
    PatternMatcher::new(needle).is_contained_in(haystack.values())
}

/// The split `n₁λ₁n₂λ₂…n_kλ_k` of a permutation at its left-to-right maxima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrDecomposition {
    pub maxima: Vec<u32>,
    pub gaps: Vec<Word>,
    /// 1-based.
    pub positions: Vec<usize>,
}

impl LrDecomposition {
    pub fn count(&self) -> usize {
        self.maxima.len()
    }

    /// Concatenate `n₁λ₁n₂λ₂…` back into the source permutation.
    pub fn splice(&self) -> Permutation {
        let mut values = Vec::new();
        for (m, gap) in self.maxima.iter().zip(&self.gaps) {
            values.push(*m);
            values.extend_from_slice(gap.entries());
        }
        Permutation::from_vec_unchecked(values)
    }
}

pub fn lr_decompose(p: &Permutation) -> Result<LrDecomposition> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let positions = p.lr_maxima_positions();
    let v = p.values();
    let maxima = positions.iter().map(|&i| v[i]).collect();
    let gaps = positions
        .iter()
        .enumerate()
        .map(|(idx, &start)| {
            let end = positions.get(idx + 1).copied().unwrap_or(v.len());
            Word(v[start + 1..end].to_vec())
        })
        .collect();
    Ok(LrDecomposition {
        maxima,
        gaps,
        positions: positions.into_iter().map(|i| i + 1).collect(),
    })
}

/// Standardizations of `p` with one entry removed.
pub fn one_point_deletions(p: &Permutation) -> Result<BTreeSet<Permutation>> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    Ok((0..p.len()).map(|i| p.delete_at(i)).collect())
}

/// Members of `set` that contain no other member.
pub fn minimal_elements<'a, I>(set: I) -> BTreeSet<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    // BTreeSet iteration is shortest first, so anything that could sit below a
    // candidate has already been seen. Checking only kept elements suffices
    // by transitivity.
    let candidates: BTreeSet<&Permutation> = set.into_iter().collect();
    let mut kept: Vec<(&Permutation, PatternMatcher)> = Vec::new();
    for cand in candidates {
        let covered = kept
            .iter()
            .any(|(m, matcher)| m.len() < cand.len() && matcher.is_contained_in(cand.values()));
        if !covered {
            kept.push((cand, PatternMatcher::new(cand)));
        }
    }
    kept.into_iter().map(|(p, _)| p.clone()).collect()
}

/// Parse a comma-separated list of permutations (each in digit-string or
/// whitespace-separated form).
pub fn parse_permutation_set(text: &str) -> Result<BTreeSet<Permutation>> {
    let mut out = BTreeSet::new();
    let mut offset = 0;
    for piece in text.split(',') {
        if piece.trim().is_empty() {
            return Err(Error::MalformedToken {
                token: piece.to_string(),
                position: offset,
            });
        }
        let p = parse_permutation(piece).map_err(|e| match e {
            Error::MalformedToken { token, position } => Error::MalformedToken {
                token,
                position: position + offset,
            },
            other => other,
        })?;
        out.insert(p);
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
pub(crate) fn perm(text: &str) -> Permutation {
    parse_permutation(text).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[&str]) -> BTreeSet<Permutation> {
        items.iter().map(|s| perm(s)).collect()
    }

    fn all_up_to(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        for len in 1..=n {
            let mut p = Permutation::identity(len);
            out.push(p.clone());
            while p.next_lex() {
                out.push(p.clone());
            }
        }
        out
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!(perm("2 4 1 5 3").values(), &[2, 4, 1, 5, 3]);
        assert_eq!(perm("231").values(), &[2, 3, 1]);
        assert_eq!(perm("2,3,1").values(), &[2, 3, 1]);
        assert_eq!(perm(" 10 9 8 7 6 5 4 3 2 1 ").len(), 10);
        assert_eq!(perm("1").values(), &[1]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_permutation("2 2 1"), Err(Error::DuplicateValue { value: 2 }));
        assert_eq!(parse_permutation("1 4"), Err(Error::OutOfRange { value: 4, len: 2 }));
        assert_eq!(parse_permutation("0"), Err(Error::OutOfRange { value: 0, len: 1 }));
        assert_eq!(parse_permutation("  "), Err(Error::EmptyTokenStream));
        assert_eq!(
            parse_permutation("1 x 2"),
            Err(Error::MalformedToken { token: "x".into(), position: 2 })
        );
        assert_eq!(
            parse_permutation("12a"),
            Err(Error::MalformedToken { token: "a".into(), position: 2 })
        );
        // Digit strings cannot express values above 9.
        assert!(parse_permutation("102").is_err());
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&[4, 1, 3]).unwrap(), perm("312"));
        assert_eq!(standardize(&[1, 2, 3]).unwrap(), perm("123"));
        assert_eq!(standardize(&[9, 2, 7, 5]).unwrap(), perm("4132"));
        assert_eq!(standardize(&[5, 3, 5]), Err(Error::DuplicateValue { value: 5 }));
        assert_eq!(standardize(&[]).unwrap(), Permutation::empty());
    }

    #[test]
    fn standardize_matches_counting_ranks() {
        let words: [&[u32]; 3] = [&[100, 7, 55, 3, 90], &[2, 9, 4], &[42]];
        for w in words {
            let expected: Vec<u32> =
                w.iter().map(|x| w.iter().filter(|y| *y <= x).count() as u32).collect();
            assert_eq!(standardize(w).unwrap().values(), &expected[..]);
        }
    }

    #[test]
    fn containment_examples() {
        assert!(perm("24153").contains(&perm("312")));
        assert!(perm("3152746").contains(&perm("2143")));
        assert!(!perm("123").contains(&perm("21")));
        assert!(perm("123").contains(&Permutation::empty()));
        assert!(Permutation::empty().contains(&Permutation::empty()));
        assert!(!Permutation::empty().contains(&perm("1")));
        for p in all_up_to(5) {
            assert!(p.contains(&p));
        }
    }

    #[test]
    fn containment_agrees_with_subset_enumeration() {
        fn brute(hay: &Permutation, needle: &Permutation) -> bool {
            let n = hay.len();
            let k = needle.len();
            (0u32..1 << n).filter(|m| m.count_ones() as usize == k).any(|mask| {
                let sub: Vec<u32> =
                    (0..n).filter(|i| mask & (1 << i) != 0).map(|i| hay.values()[i]).collect();
                standardize(&sub).unwrap() == *needle
            })
        }
        let small = all_up_to(4);
        let hays = all_up_to(6);
        for hay in hays.iter().step_by(7) {
            for needle in &small {
                assert_eq!(hay.contains(needle), brute(hay, needle), "{hay} / {needle}");
            }
        }
    }

    #[test]
    fn anchored_containment_uses_last_entry() {
        let m = PatternMatcher::new(&perm("21"));
        assert!(m.is_contained_in(&[2, 1, 3]));
        assert!(!m.is_contained_using_last(&[2, 1, 3]));
        assert!(m.is_contained_using_last(&[1, 3, 2]));
        assert!(!PatternMatcher::new(&Permutation::empty()).is_contained_using_last(&[1]));
    }

    #[test]
    fn containment_is_a_partial_order_on_small_permutations() {
        let all = all_up_to(5);
        let m = all.len();
        let below: Vec<Vec<bool>> =
            all.iter().map(|a| all.iter().map(|b| b.contains(a)).collect()).collect();
        for i in 0..m {
            assert!(below[i][i]);
            for j in 0..m {
                if i != j {
                    assert!(!(below[i][j] && below[j][i]), "{} {}", all[i], all[j]);
                }
                if !below[i][j] {
                    continue;
                }
                for (k, &jk) in below[j].iter().enumerate() {
                    assert!(!jk || below[i][k]);
                }
            }
        }
    }

    #[test]
    fn lr_decomposition_examples() {
        let d = lr_decompose(&perm("3152746")).unwrap();
        assert_eq!(d.maxima, vec![3, 5, 7]);
        assert_eq!(d.gaps, vec![Word(vec![1]), Word(vec![2]), Word(vec![4, 6])]);
        assert_eq!(d.positions, vec![1, 3, 5]);

        let d = lr_decompose(&Permutation::identity(5)).unwrap();
        assert_eq!(d.maxima, vec![1, 2, 3, 4, 5]);
        assert!(d.gaps.iter().all(Word::is_empty));

        let d = lr_decompose(&perm("4321")).unwrap();
        assert_eq!(d.maxima, vec![4]);
        assert_eq!(d.gaps, vec![Word(vec![3, 2, 1])]);

        assert_eq!(lr_decompose(&Permutation::empty()), Err(Error::EmptyPermutation));
    }

    #[test]
    fn lr_decomposition_round_trips() {
        for p in all_up_to(7) {
            let d = lr_decompose(&p).unwrap();
            assert_eq!(d.splice(), p);
            assert_eq!(d.positions[0], 1);
            assert_eq!(*d.maxima.last().unwrap() as usize, p.len());
            assert!(d.maxima.windows(2).all(|w| w[0] < w[1]));
            for (m, gap) in d.maxima.iter().zip(&d.gaps) {
                assert!(gap.entries().iter().all(|v| v < m));
            }
        }
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(one_point_deletions(&perm("231")).unwrap(), set(&["21", "12"]));
        assert_eq!(one_point_deletions(&perm("12")).unwrap(), set(&["1"]));
        assert_eq!(
            one_point_deletions(&perm("1")).unwrap(),
            BTreeSet::from([Permutation::empty()])
        );
        assert_eq!(one_point_deletions(&Permutation::empty()), Err(Error::EmptyPermutation));
        for p in all_up_to(6) {
            for q in one_point_deletions(&p).unwrap() {
                assert!(p.contains(&q));
            }
        }
    }

    #[test]
    fn minimal_element_examples() {
        assert_eq!(minimal_elements(&set(&["231", "2341", "321"])), set(&["231", "321"]));
        assert!(minimal_elements(&BTreeSet::new()).is_empty());
        assert_eq!(minimal_elements(&set(&["12", "21"])), set(&["12", "21"]));
        let dup = vec![perm("21"), perm("21"), perm("321")];
        assert_eq!(minimal_elements(&dup), set(&["21"]));
    }

    #[test]
    fn lex_rank_round_trips_and_orders() {
        for n in 0..=6 {
            let mut p = Permutation::identity(n);
            let mut rank = 0;
            loop {
                assert_eq!(p.lex_rank(), rank);
                assert_eq!(Permutation::from_lex_rank(n, rank), p);
                rank += 1;
                if !p.next_lex() {
                    break;
                }
            }
            assert_eq!(rank, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn extension_helpers() {
        assert_eq!(perm("21").extend_right(1), perm("321"));
        assert_eq!(perm("21").extend_right(3), perm("213"));
        assert_eq!(perm("21").extend_right(2), perm("312"));
        assert_eq!(perm("21").with_max_appended(), perm("213"));
        assert_eq!(perm("21").with_max_prepended(), perm("321"));
        assert!(perm("213").ends_with_max());
        assert!(!Permutation::empty().ends_with_max());
    }

    #[test]
    fn set_parsing_and_serde() {
        assert_eq!(parse_permutation_set("21, 2341").unwrap(), set(&["21", "2341"]));
        assert!(parse_permutation_set("21,,12").is_err());
        let p = perm("3152746");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "\"3 1 5 2 7 4 6\"");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p);
        let e: Permutation = serde_json::from_str("\"\"").unwrap();
        assert!(e.is_empty());
    }
}
