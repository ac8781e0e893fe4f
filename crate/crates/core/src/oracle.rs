//! Brute-force ground truth over `S_1 … S_h`.
//!
//! Everything here is exhaustive. Work is split by the leading symbol of each
//! permutation and run on a private rayon pool; results are merged in
//! lexicographic order so output never depends on the worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operators::{bubble_k, bubble_slice};
use crate::perm::{minimal_elements, PatternMatcher, Permutation};

/// Largest length the oracle will enumerate unless configured otherwise.
pub const DEFAULT_CAP: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
    /// Worker threads; 0 picks the rayon default.
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            cap: DEFAULT_CAP,
            workers: 0,
        }
    }
}

/// `Av(basis)` with the basis reduced to an antichain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    basis: BTreeSet<Permutation>,
}

impl ClassSpec {
    pub fn new<'a, I: IntoIterator<Item = &'a Permutation>>(basis: I) -> Self {
        ClassSpec {
            basis: minimal_elements(basis),
        }
    }

    pub fn basis(&self) -> &BTreeSet<Permutation> {
        &self.basis
    }

    pub fn admits(&self, sigma: &Permutation) -> bool {
        self.basis.iter().all(|b| !sigma.contains(b))
    }

    /// Sorted one-line basis strings joined by `;`.
    pub fn key(&self) -> String {
        let mut parts: Vec<String> = self.basis.iter().map(|p| p.to_string()).collect();
        parts.sort();
        parts.join(";")
    }

    fn matchers(&self) -> Vec<PatternMatcher> {
        self.basis.iter().map(PatternMatcher::new).collect()
    }
}

/// Exact class sizes `a_n` for `n = 1..=horizon`, with `a_n^(1/n)` alongside.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountSequence {
    pub counts: BTreeMap<usize, u64>,
    pub growth_points: Vec<f64>,
}

impl CountSequence {
    pub fn from_counts(counts: BTreeMap<usize, u64>) -> Self {
        let growth_points = counts.iter().map(|(&n, &a)| nth_root(a, n)).collect();
        CountSequence {
            counts,
            growth_points,
        }
    }

    pub fn horizon(&self) -> usize {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    pub fn values(&self) -> Vec<u64> {
        self.counts.values().copied().collect()
    }

    /// CSV table with header `n,count,root`.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Cache(e.to_string());
        writer.write_record(["n", "count", "root"]).map_err(io)?;
        for ((n, a), root) in self.counts.iter().zip(&self.growth_points) {
            writer
                .write_record([n.to_string(), a.to_string(), format!("{root:.6}")])
                .map_err(io)?;
        }
        let bytes = writer.into_inner().map_err(|e| Error::Cache(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is ascii"))
    }
}

fn nth_root(a: u64, n: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    (a as f64).powf(1.0 / n as f64)
}

/// `a_N^(1/N)` at the largest computed `N`. A finite-horizon estimate only;
/// it says nothing rigorous about the limsup.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthEstimate {
    pub horizon: usize,
    pub value: f64,
}

impl fmt::Display for GrowthEstimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:.4} (a_{n}^(1/{n}), finite-horizon estimate)",
            self.value,
            n = self.horizon
        )
    }
}

pub fn growth_estimate(cs: &CountSequence) -> Result<GrowthEstimate> {
    let (&n, &a) = cs.counts.iter().next_back().ok_or(Error::EmptySequence)?;
    Ok(GrowthEstimate {
        horizon: n,
        value: nth_root(a, n),
    })
}

/// `τ ⪯ σ` with `σ` in the set and `τ` outside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub tau: Permutation,
    pub sigma: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DownsetReport {
    pub is_downset: bool,
    pub violation: Option<Violation>,
    pub horizon: usize,
}

/// `σ ∈ B⁻¹(Av(π))`, i.e. `B(σ)` avoids `π`.
pub fn in_inverse_class(sigma: &Permutation, pattern: &Permutation) -> bool {
    !PatternMatcher::new(pattern).is_contained_in(&bubble_slice(sigma.values()))
}

/// Lexicographic walk over all of `S_n`.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    next: Option<Permutation>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        SymmetricGroup {
            next: Some(Permutation::identity(n)),
        }
    }
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Per-length membership bits indexed by lexicographic rank.
#[derive(Clone, Debug)]
pub struct MembershipTable {
    levels: Vec<Vec<bool>>,
}

impl MembershipTable {
    pub fn horizon(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.levels[p.len()][p.lex_rank()]
    }

    pub fn level(&self, n: usize) -> &[bool] {
        &self.levels[n]
    }

    pub fn count(&self, n: usize) -> u64 {
        self.levels[n].iter().filter(|&&b| b).count() as u64
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Visit the `(n-1)!` permutations of length `n` starting with `lead`, in
/// lexicographic order, until `visit` returns false.
fn scan_block(n: usize, lead: u32, mut visit: impl FnMut(&Permutation) -> bool) {
    let mut values = Vec::with_capacity(n);
    values.push(lead);
    values.extend((1..=n as u32).filter(|&v| v != lead));
    let mut p = Permutation::from_vec_unchecked(values);
    loop {
        if !visit(&p) || !p.next_lex() || p.values()[0] != lead {
            return;
        }
    }
}

pub struct Oracle {
    cap: usize,
    pool: rayon::ThreadPool,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(OracleConfig::default())
    }
}

impl Oracle {
    pub fn new(config: OracleConfig) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .expect("failed to start oracle worker pool");
        Oracle {
            cap: config.cap,
            pool,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn workers(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn check_horizon(&self, horizon: usize) -> Result<()> {
        if horizon > self.cap {
            return Err(Error::HorizonExceeded {
                requested: horizon,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Run `f` on this oracle's worker pool.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }

    /// All `n!` permutations of length `n` in lexicographic order.
    pub fn enumerate_sn(&self, n: usize) -> Result<SymmetricGroup> {
        self.check_horizon(n)?;
        Ok(SymmetricGroup::new(n))
    }

    /// Evaluate `member` on every permutation of length `0..=horizon`.
    pub fn membership<F>(&self, horizon: usize, member: F) -> Result<MembershipTable>
    where
        F: Fn(&Permutation) -> bool + Sync,
    {
        self.check_horizon(horizon)?;
        let levels = self.install(|| {
            (0..=horizon)
                .map(|n| {
                    if n == 0 {
                        return vec![member(&Permutation::empty())];
                    }
                    let blocks: Vec<Vec<bool>> = (1..=n as u32)
                        .into_par_iter()
                        .map(|lead| {
                            let mut bits = Vec::with_capacity(factorial(n - 1));
                            scan_block(n, lead, |p| {
                                bits.push(member(p));
                                true
                            });
                            bits
                        })
                        .collect();
                    blocks.concat()
                })
                .collect()
        });
        Ok(MembershipTable { levels })
    }

    /// The first permutation (by length, then lexicographically) with length
    /// in `lengths` for which `holds` is false.
    pub fn first_failure<F>(
        &self,
        lengths: std::ops::RangeInclusive<usize>,
        holds: F,
    ) -> Result<Option<Permutation>>
    where
        F: Fn(&Permutation) -> bool + Sync,
    {
        self.check_horizon(*lengths.end())?;
        Ok(self.install(|| {
            lengths.into_iter().find_map(|n| {
                if n == 0 {
                    let e = Permutation::empty();
                    return (!holds(&e)).then_some(e);
                }
                let found: Vec<Option<Permutation>> = (1..=n as u32)
                    .into_par_iter()
                    .map(|lead| {
                        let mut hit = None;
                        scan_block(n, lead, |p| {
                            if holds(p) {
                                true
                            } else {
                                hit = Some(p.clone());
                                false
                            }
                        });
                        hit
                    })
                    .collect();
                found.into_iter().flatten().next()
            })
        }))
    }

    /// Whether the set described by `table` is closed under one-point
    /// deletion, reporting the least violation.
    pub fn downset_of(&self, table: &MembershipTable) -> DownsetReport {
        let horizon = table.horizon();
        let violation = self.install(|| {
            (1..=horizon).find_map(|n| {
                let level = table.level(n);
                let rank = (0..level.len()).into_par_iter().find_first(|&r| {
                    level[r] && {
                        let sigma = Permutation::from_lex_rank(n, r);
                        (0..n).any(|i| !table.contains(&sigma.delete_at(i)))
                    }
                })?;
                let sigma = Permutation::from_lex_rank(n, rank);
                let tau = (0..n)
                    .map(|i| sigma.delete_at(i))
                    .filter(|t| !table.contains(t))
                    .min()
                    .expect("violating deletion exists");
                Some(Violation { tau, sigma })
            })
        });
        DownsetReport {
            is_downset: violation.is_none(),
            violation,
            horizon,
        }
    }

    /// Non-members all of whose one-point deletions are members.
    pub fn minimal_non_members(&self, table: &MembershipTable) -> BTreeSet<Permutation> {
        self.install(|| {
            (0..=table.horizon())
                .flat_map(|n| {
                    let level = table.level(n);
                    (0..level.len())
                        .into_par_iter()
                        .filter_map(|r| {
                            if level[r] {
                                return None;
                            }
                            let sigma = Permutation::from_lex_rank(n, r);
                            (0..n)
                                .all(|i| table.contains(&sigma.delete_at(i)))
                                .then_some(sigma)
                        })
                        .collect::<Vec<_>>()
                })
                .collect()
        })
    }

    /// Membership of `B⁻¹(Av(patterns))` up to `horizon`.
    pub fn preimage_table(&self, patterns: &BTreeSet<Permutation>, horizon: usize) -> Result<MembershipTable> {
        let matchers: Vec<PatternMatcher> = patterns.iter().map(PatternMatcher::new).collect();
        self.membership(horizon, |sigma| {
            let image = bubble_slice(sigma.values());
            matchers.iter().all(|m| !m.is_contained_in(&image))
        })
    }

    pub fn downset_check(&self, pattern: &Permutation, horizon: usize) -> Result<DownsetReport> {
        self.check_set_class(&BTreeSet::from([pattern.clone()]), horizon)
    }

    /// Downset check for `B⁻¹(Av(patterns))`; the patterns need not be good.
    pub fn check_set_class(
        &self,
        patterns: &BTreeSet<Permutation>,
        horizon: usize,
    ) -> Result<DownsetReport> {
        let table = self.preimage_table(patterns, horizon)?;
        Ok(self.downset_of(&table))
    }

    /// Minimal `σ` with `|σ| ≤ horizon` and `π ⪯ B(σ)`.
    pub fn empirical_basis(&self, pattern: &Permutation, horizon: usize) -> Result<BTreeSet<Permutation>> {
        self.empirical_set_basis(&BTreeSet::from([pattern.clone()]), horizon)
    }

    pub fn empirical_set_basis(
        &self,
        patterns: &BTreeSet<Permutation>,
        horizon: usize,
    ) -> Result<BTreeSet<Permutation>> {
        let table = self.preimage_table(patterns, horizon)?;
        if !self.downset_of(&table).is_downset {
            let names: Vec<String> = patterns.iter().map(|p| p.to_string()).collect();
            return Err(Error::NotADownset {
                pattern: names.join(", "),
                horizon,
            });
        }
        Ok(self.minimal_non_members(&table))
    }

    /// Exact counts of `Av(basis)` by growing avoiders one right-most entry
    /// at a time. Every prefix of an avoider avoids, so the tree reaches
    /// every member.
    pub fn count_av(&self, spec: &ClassSpec, horizon: usize) -> Result<CountSequence> {
        self.check_horizon(horizon)?;
        let matchers = spec.matchers();
        if spec.basis().contains(&Permutation::empty()) {
            return Ok(CountSequence::from_counts((1..=horizon).map(|n| (n, 0)).collect()));
        }
        let children = |parent: &Permutation| -> Vec<Permutation> {
            (1..=parent.len() as u32 + 1)
                .map(|v| parent.extend_right(v))
                .filter(|child| matchers.iter().all(|m| !m.is_contained_using_last(child.values())))
                .collect()
        };
        let mut counts = BTreeMap::new();
        self.install(|| {
            let mut frontier = vec![Permutation::empty()];
            for n in 1..=horizon {
                if n == horizon {
                    let total: usize = frontier.par_iter().map(|p| children(p).len()).sum();
                    counts.insert(n, total as u64);
                } else {
                    frontier = frontier.par_iter().flat_map_iter(&children).collect();
                    counts.insert(n, frontier.len() as u64);
                }
            }
        });
        Ok(CountSequence::from_counts(counts))
    }

    /// Counts by filtering all of `S_n`; reference for [`Oracle::count_av`].
    pub fn count_av_naive(&self, spec: &ClassSpec, horizon: usize) -> Result<CountSequence> {
        let table = self.membership(horizon, |sigma| spec.admits(sigma))?;
        let counts = (1..=horizon).map(|n| (n, table.count(n))).collect();
        Ok(CountSequence::from_counts(counts))
    }

    /// All `(k+1)!` permutations of length `k+2` ending in 1.
    pub fn gamma(&self, k: usize) -> Result<BTreeSet<Permutation>> {
        self.check_horizon(k + 2)?;
        Ok(SymmetricGroup::new(k + 1)
            .map(|q| {
                let mut values: Vec<u32> = q.values().iter().map(|v| v + 1).collect();
                values.push(1);
                Permutation::from_vec_unchecked(values)
            })
            .collect())
    }

    /// `B^k(σ)` is sorted exactly when `σ` avoids every member of `Γ_k`, for
    /// all `σ` up to `horizon`.
    pub fn verify_gamma(&self, k: usize, horizon: usize) -> Result<bool> {
        let gamma = ClassSpec::new(&self.gamma(k)?);
        let failure = self.first_failure(1..=horizon, |sigma| {
            bubble_k(sigma, k).is_identity() == gamma.admits(sigma)
        })?;
        Ok(failure.is_none())
    }
}
