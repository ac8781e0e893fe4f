//! Named exhaustive suites that re-derive every construction from the oracle.
//!
//! Reports contain no timings or worker counts, so the rendered text is
//! identical for any pool size.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::basis::{inverse_basis, Outcome};
use crate::classification::{classify, witness_pair, Case};
use crate::error::Result;
use crate::operators::{bubble_k, bubble_recursive, bubble_splice, stack_pass};
use crate::oracle::{ClassSpec, Oracle, SymmetricGroup};
use crate::perm::{lr_decompose, minimal_elements, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Operators,
    GoodBases,
    Witnesses,
    Gamma,
    Sb,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Operators,
        Suite::GoodBases,
        Suite::Witnesses,
        Suite::Gamma,
        Suite::Sb,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Operators => "operators",
            Suite::GoodBases => "good-bases",
            Suite::Witnesses => "witnesses",
            Suite::Gamma => "gamma",
            Suite::Sb => "sb",
            Suite::Counts => "counts",
        }
    }

    /// `good-bases` reads its horizon as the longest pattern (the oracle
    /// then runs to three more); the rest read it as the longest `σ`.
    pub fn default_horizon(self) -> usize {
        match self {
            Suite::GoodBases => 5,
            _ => 8,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                format!("unknown suite {s:?}; expected one of {}", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    /// Command line that reproduces a failure.
    pub repro: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub horizon: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = format!("suite {} (n = {})\n", self.suite, self.horizon);
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}: {}\n", c.name, c.detail));
            if let Some(repro) = c.repro.as_ref().filter(|_| !c.passed) {
                out.push_str(&format!("      repro: {repro}\n"));
            }
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("result: {verdict} ({passed}/{} checks)\n", self.checks.len()));
        out
    }
}

struct Checks {
    suite: Suite,
    horizon: usize,
    items: Vec<CheckOutcome>,
}

impl Checks {
    fn new(suite: Suite, horizon: usize) -> Self {
        Checks {
            suite,
            horizon,
            items: Vec::new(),
        }
    }

    fn suite_repro(&self) -> String {
        format!("bubblepat verify {} -n {}", self.suite, self.horizon)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>, repro: Option<String>) {
        self.items.push(CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
            repro: repro.or_else(|| Some(self.suite_repro())),
        });
    }

    /// Records a property that must hold on every permutation of the given
    /// lengths.
    fn universal(
        &mut self,
        oracle: &Oracle,
        name: &str,
        lengths: std::ops::RangeInclusive<usize>,
        holds: impl Fn(&Permutation) -> bool + Sync,
        repro: impl Fn(&Permutation) -> String,
    ) -> Result<()> {
        let range = format!("S_{}..S_{}", lengths.start(), lengths.end());
        match oracle.first_failure(lengths, holds)? {
            None => self.push(name, true, format!("holds on {range}"), None),
            Some(p) => self.push(name, false, format!("fails at {p}"), Some(repro(&p))),
        }
        Ok(())
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            horizon: self.horizon,
            checks: self.items,
        }
    }
}

fn set(items: &[&[u32]]) -> BTreeSet<Permutation> {
    items
        .iter()
        .map(|v| Permutation::new(v.to_vec()).expect("literal permutation"))
        .collect()
}

/// The SB-sortable basis `{3241, 2341, 4231, 2431}`.
pub fn sb_basis() -> BTreeSet<Permutation> {
    set(&[&[3, 2, 4, 1], &[2, 3, 4, 1], &[4, 2, 3, 1], &[2, 4, 3, 1]])
}

fn compact(p: &Permutation) -> String {
    if p.len() <= 9 {
        p.values().iter().map(|v| v.to_string()).collect()
    } else {
        format!("'{p}'")
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn run_suite(suite: Suite, horizon: usize, oracle: &Oracle) -> Result<SuiteReport> {
    match suite {
        Suite::Operators => operators(horizon, oracle),
        Suite::GoodBases => good_bases(horizon, oracle),
        Suite::Witnesses => witnesses(horizon, oracle),
        Suite::Gamma => gamma(horizon, oracle),
        Suite::Sb => sb(horizon, oracle),
        Suite::Counts => counts(horizon, oracle),
    }
}

fn operators(h: usize, oracle: &Oracle) -> Result<SuiteReport> {
    let mut c = Checks::new(Suite::Operators, h);
    let apply = |chain: &'static str| move |p: &Permutation| format!("bubblepat apply {} --chain {chain}", compact(p));
    let av_231_321 = ClassSpec::new(&set(&[&[2, 3, 1], &[3, 2, 1]]));
    let av_231 = ClassSpec::new(&set(&[&[2, 3, 1]]));

    c.universal(oracle, "recursive and splice definitions of B agree", 0..=h, |p| {
        bubble_recursive(p) == bubble_splice(p)
    }, apply("B"))?;
    c.universal(oracle, "B(σ) ends with its maximum", 1..=h, |p| bubble_splice(p).ends_with_max(), apply("B"))?;
    c.universal(oracle, "B sorts exactly Av(231, 321)", 1..=h, |p| {
        bubble_splice(p).is_identity() == av_231_321.admits(p)
    }, apply("B"))?;
    c.universal(oracle, "S sorts exactly Av(231)", 1..=h, |p| {
        stack_pass(p).is_identity() == av_231.admits(p)
    }, apply("S"))?;
    c.universal(oracle, "n-1 passes of B sort S_n", 1..=h, |p| {
        bubble_k(p, p.len() - 1).is_identity()
    }, |p| format!("bubblepat apply {} --chain B^{}", compact(p), p.len() - 1))?;
    c.universal(oracle, "B keeps the order of non-maxima", 1..=h, |p| {
        let maxima = lr_decompose(p).expect("non-empty").maxima;
        let rest = |q: &Permutation| -> Vec<u32> {
            q.values().iter().copied().filter(|v| !maxima.contains(v)).collect()
        };
        rest(p) == rest(&bubble_splice(p))
    }, apply("B"))?;
    Ok(c.finish())
}

fn good_bases(max_len: usize, oracle: &Oracle) -> Result<SuiteReport> {
    let mut c = Checks::new(Suite::GoodBases, max_len);
    oracle.check_horizon(max_len + 3)?;
    for len in 2..=max_len {
        let mut checked = 0usize;
        let mut failures = Vec::new();
        for p in SymmetricGroup::new(len) {
            let class = classify(&p)?;
            if !class.good {
                continue;
            }
            checked += 1;
            if let Some(reason) = good_pattern_failure(&p, class.case, oracle)? {
                failures.push(format!("{p}: {reason}"));
            }
        }
        let name = format!("good patterns of length {len}");
        match failures.first() {
            None => c.push(
                name,
                true,
                format!("{checked} bases match the oracle at length {}", len + 3),
                None,
            ),
            Some(first) => {
                let pattern = first.split(':').next().unwrap_or_default().replace(' ', "");
                c.push(
                    name,
                    false,
                    format!("{} of {checked} disagree; first {first}", failures.len()),
                    Some(format!("bubblepat basis {pattern} --verify")),
                );
            }
        }
    }
    Ok(c.finish())
}

fn good_pattern_failure(p: &Permutation, case: Case, oracle: &Oracle) -> Result<Option<String>> {
    let horizon = p.len() + 3;
    let result = inverse_basis(p)?;
    let basis = &result.basis;
    if result.outcome != Outcome::Basis {
        return Ok(Some("no basis produced".into()));
    }
    if &minimal_elements(basis) != basis {
        return Ok(Some("basis is not an antichain".into()));
    }
    let longest = basis.iter().map(Permutation::len).max().unwrap_or(0);
    let bound = match case {
        Case::OneLr => p.len() + 1,
        Case::TwoLrEndsMax | Case::ThreeLrSpecial => p.len(),
        Case::ThreeLrReducible => p.len() + 1,
        _ => p.len() + 2,
    };
    if longest > bound {
        return Ok(Some(format!("basis element of length {longest} exceeds {bound}")));
    }
    let report = oracle.downset_check(p, horizon)?;
    if let Some(v) = report.violation {
        return Ok(Some(format!("not a downset: {} ⪯ {}", v.tau, v.sigma)));
    }
    let empirical = oracle.empirical_basis(p, horizon)?;
    if &empirical != basis {
        return Ok(Some("constructed basis differs from the oracle".into()));
    }
    if empirical.iter().any(|b| b.len() == horizon) {
        return Ok(Some(format!("oracle finds a basis element of length {horizon}")));
    }
    Ok(None)
}

fn witnesses(h: usize, oracle: &Oracle) -> Result<SuiteReport> {
    let mut c = Checks::new(Suite::Witnesses, h);
    oracle.check_horizon(h)?;
    for len in 1..=h {
        let patterns: Vec<Permutation> = SymmetricGroup::new(len)
            .filter(|p| classify(p).map(|c| !c.good).unwrap_or(false))
            .collect();
        let failure = oracle.install(|| {
            use rayon::prelude::*;
            patterns
                .par_iter()
                .find_first(|p| witness_pair(p).is_err())
                .cloned()
        });
        let name = format!("witness pairs at length {len}");
        match failure {
            None => c.push(name, true, format!("{} non-good patterns verified", patterns.len()), None),
            Some(p) => c.push(
                name,
                false,
                format!("invalid witness for {p}"),
                Some(format!("bubblepat basis {}", compact(&p))),
            ),
        }
    }
    Ok(c.finish())
}

fn gamma(h: usize, oracle: &Oracle) -> Result<SuiteReport> {
    let mut c = Checks::new(Suite::Gamma, h);
    oracle.check_horizon(h)?;
    let max_k = 3usize.min(h.saturating_sub(2));
    let mut gammas = Vec::new();
    for k in 0..=max_k + 1 {
        gammas.push(ClassSpec::new(&oracle.gamma(k)?));
    }

    for (k, gamma) in gammas.iter().enumerate().take(max_k + 1) {
        let size = gamma.basis().len();
        let expected: usize = (1..=k + 1).product();
        c.push(format!("|Γ_{k}| = (k+1)!"), size == expected, format!("{size} (expected {expected})"), None);
    }
    for k in 1..=max_k {
        let av = &gammas[k];
        c.universal(oracle, &format!("B^{k} sorts exactly Av(Γ_{k})"), 1..=h, |p| {
            bubble_k(p, k).is_identity() == av.admits(p)
        }, |p| format!("bubblepat apply {} --chain B^{k}", compact(p)))?;
        let prev = &gammas[k - 1];
        c.universal(oracle, &format!("σ ∈ Av(Γ_{k}) iff B(σ) ∈ Av(Γ_{})", k - 1), 1..=h, |p| {
            av.admits(p) == prev.admits(&bubble_splice(p))
        }, |p| format!("bubblepat apply {} --chain B", compact(p)))?;
    }
    for k in 1..=4usize.min(h) {
        let counts = oracle.count_av(&ClassSpec::new(&oracle.gamma(k - 1)?), h)?;
        let mismatch = (k..=h).find(|&n| {
            let expected = (k as u64).pow((n - k) as u32) * (1..=k as u64).product::<u64>();
            counts.counts[&n] != expected
        });
        let label = format!("|Av(Γ_{}) ∩ S_n| = {k}^(n-{k})·{k}!", k - 1);
        let basis_arg = ClassSpec::new(&oracle.gamma(k - 1)?).key().replace(';', ",");
        match mismatch {
            None => c.push(label, true, format!("n = {k}..{h}"), None),
            Some(n) => c.push(
                label,
                false,
                format!("n = {n}: counted {}", counts.counts[&n]),
                Some(format!("bubblepat enumerate '{basis_arg}' -n {h}")),
            ),
        }
    }
    if max_k >= 2 {
        let report = oracle.check_set_class(gammas[2].basis(), h)?;
        c.push(
            "B⁻¹(Av(Γ_2)) is a downset",
            report.is_downset,
            match &report.violation {
                None => format!("no violation up to length {h}"),
                Some(v) => format!("{} ⪯ {}", v.tau, v.sigma),
            },
            None,
        );
        let g2 = gammas[2].basis().clone();
        let g3 = &gammas[3];
        c.universal(oracle, "B⁻¹(Av(Γ_2)) = Av(Γ_3)", 1..=h, |p| {
            let image = bubble_splice(p);
            g2.iter().all(|b| !image.contains(b)) == g3.admits(p)
        }, |p| format!("bubblepat apply {} --chain B", compact(p)))?;
    }
    Ok(c.finish())
}

fn sb(h: usize, oracle: &Oracle) -> Result<SuiteReport> {
    let mut c = Checks::new(Suite::Sb, h);
    let spec = ClassSpec::new(&sb_basis());
    let constructed = inverse_basis(&Permutation::new(vec![2, 3, 1])?)?.basis;
    c.push(
        "basis of B⁻¹(Av(231))",
        constructed == sb_basis(),
        format!("{{{}}}", constructed.iter().map(compact).collect::<Vec<_>>().join(", ")),
        Some("bubblepat basis 231 --verify".into()),
    );
    c.universal(oracle, "SB sorts exactly Av(3241, 2341, 4231, 2431)", 1..=h, |p| {
        stack_pass(&bubble_splice(p)).is_identity() == spec.admits(p)
    }, |p| format!("bubblepat apply {} --chain SB", compact(p)))?;
    let counts = oracle.count_av(&spec, h)?;
    let expected: Vec<u64> = (1..=h as u64).map(|n| binomial(2 * n - 2, n - 1)).collect();
    c.push(
        "counts are C(2n-2, n-1)",
        counts.values() == expected,
        format!("{:?}", counts.values()),
        Some(format!("bubblepat enumerate 3241,2341,4231,2431 -n {h}")),
    );
    Ok(c.finish())
}

/// Twenty fixed bases drawn from `S_3 ∪ S_4`.
pub fn sample_bases() -> Vec<BTreeSet<Permutation>> {
    let pool: Vec<Permutation> = SymmetricGroup::new(3).chain(SymmetricGroup::new(4)).collect();
    (0..20)
        .map(|i| {
            let first = pool[(7 * i + 3) % pool.len()].clone();
            let second = pool[(11 * i + 5) % pool.len()].clone();
            let mut basis = BTreeSet::from([first]);
            if i % 3 != 0 {
                basis.insert(second);
            }
            basis
        })
        .collect()
}

fn counts(h: usize, oracle: &Oracle) -> Result<SuiteReport> {
    let mut c = Checks::new(Suite::Counts, h);
    for (i, basis) in sample_bases().iter().enumerate() {
        let spec = ClassSpec::new(basis);
        let tree = oracle.count_av(&spec, h)?;
        let naive = oracle.count_av_naive(&spec, h)?;
        c.push(
            format!("sample {:02} Av({})", i + 1, spec.basis().iter().map(compact).collect::<Vec<_>>().join(",")),
            tree == naive,
            format!("{:?}", tree.values()),
            Some(format!(
                "bubblepat enumerate {} -n {h}",
                spec.basis().iter().map(compact).collect::<Vec<_>>().join(",")
            )),
        );
    }
    Ok(c.finish())
}
