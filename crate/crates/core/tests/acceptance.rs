//! Acceptance criteria, one line each. Run with
//! `cargo test -p bubblepat --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bubblepat::basis::{inverse_basis, inverse_basis_set};
use bubblepat::classification::{classify, witness_pair};
use bubblepat::operators::{bubble_k, bubble_recursive, bubble_splice, stack_pass};
use bubblepat::oracle::{ClassSpec, Oracle, OracleConfig, SymmetricGroup};
use bubblepat::perm::{parse_permutation, Permutation};
use bubblepat::verify::{run_suite, Suite};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Verdict = Result<String, String>;

fn perm(text: &str) -> Permutation {
    parse_permutation(text).unwrap()
}

fn set(items: &[&str]) -> BTreeSet<Permutation> {
    items.iter().map(|s| perm(s)).collect()
}

fn lengths(range: std::ops::RangeInclusive<usize>) -> impl Iterator<Item = Permutation> {
    range.flat_map(SymmetricGroup::new)
}

fn avoids_all(sigma: &Permutation, basis: &BTreeSet<Permutation>) -> bool {
    basis.iter().all(|b| !sigma.contains(b))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle() -> Oracle {
    Oracle::new(OracleConfig { cap: 11, workers: 0 })
}

fn c1_operator_equivalence() -> Verdict {
    let start = Instant::now();
    let mut checked = 0usize;
    for p in lengths(0..=9) {
        ensure(bubble_recursive(&p) == bubble_splice(&p), || format!("definitions differ at {p}"))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} permutations of length 0..9 agree in {:.2}s", elapsed.as_secs_f64()))
}

fn c2_one_pass_sortable() -> Verdict {
    let basis = set(&["231", "321"]);
    let mut sortable = 0usize;
    for p in lengths(1..=9) {
        let sorted = bubble_splice(&p).is_identity();
        ensure(sorted == avoids_all(&p, &basis), || format!("mismatch at {p}"))?;
        sortable += sorted as usize;
    }
    Ok(format!("{sortable} sortable permutations over S_1..S_9, all in Av(231, 321)"))
}

fn c3_basis_231() -> Verdict {
    let expected = set(&["3241", "2341", "4231", "2431"]);
    let constructed = inverse_basis(&perm("231")).map_err(|e| e.to_string())?.basis;
    ensure(constructed == expected, || format!("constructed {constructed:?}"))?;
    let empirical = oracle().empirical_basis(&perm("231"), 6).map_err(|e| e.to_string())?;
    ensure(empirical == expected, || format!("empirical {empirical:?}"))?;
    Ok("constructed = empirical = {3241, 2341, 4231, 2431}".into())
}

fn c4_good_patterns() -> Verdict {
    let start = Instant::now();
    let oracle = oracle();
    let mut checked = 0usize;
    for p in lengths(2..=5) {
        if !classify(&p).map_err(|e| e.to_string())?.good {
            continue;
        }
        let horizon = p.len() + 3;
        let report = oracle.downset_check(&p, horizon).map_err(|e| e.to_string())?;
        ensure(report.is_downset, || format!("{p}: not a downset up to {horizon}"))?;
        let constructed = inverse_basis(&p).map_err(|e| e.to_string())?.basis;
        let empirical = oracle.empirical_basis(&p, horizon).map_err(|e| e.to_string())?;
        ensure(constructed == empirical, || {
            format!("{p}: constructed {constructed:?} vs empirical {empirical:?}")
        })?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(15 * 60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} good patterns match the oracle in {:.1}s", elapsed.as_secs_f64()))
}

fn c5_bad_witnesses() -> Verdict {
    let mut checked = 0usize;
    for p in lengths(1..=5) {
        if classify(&p).map_err(|e| e.to_string())?.good {
            continue;
        }
        let w = witness_pair(&p).map_err(|e| e.to_string())?;
        ensure(w.theta2.contains(&w.theta1), || format!("{p}: θ₁ ⋠ θ₂"))?;
        ensure(bubble_splice(&w.theta1).contains(&p), || format!("{p}: π ⋠ B(θ₁)"))?;
        ensure(!bubble_splice(&w.theta2).contains(&p), || format!("{p}: π ⪯ B(θ₂)"))?;
        checked += 1;
    }
    Ok(format!("{checked} non-good patterns have valid witness pairs"))
}

fn c6_reductions() -> Verdict {
    for (long, short) in [("213", "21"), ("1324", "132")] {
        let (long, short) = (perm(long), perm(short));
        for sigma in lengths(1..=7) {
            let image = bubble_splice(&sigma);
            ensure(image.contains(&long) == image.contains(&short), || {
                format!("{long} vs {short} differ at {sigma}")
            })?;
        }
    }
    Ok("preimages of Av(213)/Av(21) and Av(1324)/Av(132) agree on S_1..S_7".into())
}

fn c7_special_three() -> Verdict {
    let expected = set(&["123", "213", "132", "312"]);
    let constructed = inverse_basis(&perm("123")).map_err(|e| e.to_string())?.basis;
    ensure(constructed == expected, || format!("constructed {constructed:?}"))?;
    let pattern = perm("123");
    for sigma in lengths(1..=7) {
        ensure(
            avoids_all(&sigma, &constructed) == !bubble_splice(&sigma).contains(&pattern),
            || format!("mismatch at {sigma}"),
        )?;
    }
    Ok("basis {123, 213, 132, 312} describes the preimage on S_1..S_7".into())
}

fn c8_sb_sortable() -> Verdict {
    let basis = set(&["3241", "2341", "4231", "2431"]);
    let expected = [1u64, 2, 6, 20, 70, 252, 924, 3432];
    let mut per_length = Vec::new();
    for n in 1..=8 {
        let mut count = 0u64;
        for sigma in SymmetricGroup::new(n) {
            let sorted = stack_pass(&bubble_splice(&sigma)).is_identity();
            ensure(sorted == avoids_all(&sigma, &basis), || format!("mismatch at {sigma}"))?;
            count += sorted as u64;
        }
        per_length.push(count);
    }
    ensure(per_length == expected, || format!("counts {per_length:?}"))?;
    let tree = oracle()
        .count_av(&ClassSpec::new(&basis), 8)
        .map_err(|e| e.to_string())?
        .values();
    ensure(tree == expected, || format!("insertion-tree counts {tree:?}"))?;
    Ok(format!("SB-sortable = Av(3241, 2341, 4231, 2431), counts {per_length:?}"))
}

fn c9_k_pass_sortable() -> Verdict {
    let oracle = oracle();
    let mut gammas = Vec::new();
    for k in 0..=3usize {
        let g = oracle.gamma(k).map_err(|e| e.to_string())?;
        let factorial: usize = (1..=k + 1).product();
        ensure(g.len() == factorial, || format!("|Γ_{k}| = {}", g.len()))?;
        ensure(
            g.iter().all(|p| p.len() == k + 2 && *p.values().last().unwrap() == 1),
            || format!("Γ_{k} has a wrong member"),
        )?;
        gammas.push(g);
    }
    for (k, g) in gammas.iter().enumerate().skip(1) {
        for sigma in lengths(1..=8) {
            ensure(bubble_k(&sigma, k).is_identity() == avoids_all(&sigma, g), || {
                format!("k = {k}: mismatch at {sigma}")
            })?;
        }
    }
    for k in 1..=4usize {
        let g = &gammas[k - 1];
        for n in k..=8 {
            let count = SymmetricGroup::new(n).filter(|s| avoids_all(s, g)).count() as u64;
            let expected = (k as u64).pow((n - k) as u32) * (1..=k as u64).product::<u64>();
            ensure(count == expected, || format!("|Av(Γ_{}) ∩ S_{n}| = {count}, expected {expected}", k - 1))?;
        }
    }
    Ok("B^k sorts exactly Av(Γ_k) for k ≤ 3 on S_1..S_8; |Γ_k| and k^(n-k)·k! verified".into())
}

fn c10_gamma_two() -> Verdict {
    let oracle = oracle();
    let g2 = oracle.gamma(2).map_err(|e| e.to_string())?;
    let g3 = oracle.gamma(3).map_err(|e| e.to_string())?;
    let report = oracle.check_set_class(&g2, 8).map_err(|e| e.to_string())?;
    ensure(report.is_downset, || format!("violation {:?}", report.violation))?;
    for sigma in lengths(1..=8) {
        ensure(avoids_all(&bubble_splice(&sigma), &g2) == avoids_all(&sigma, &g3), || {
            format!("mismatch at {sigma}")
        })?;
    }
    Ok("preimage of Av(Γ_2) is a downset and equals Av(Γ_3) on S_1..S_8".into())
}

fn c11_intersections() -> Verdict {
    let good: Vec<Permutation> = lengths(1..=4)
        .filter(|p| classify(p).map(|c| c.good).unwrap_or(false))
        .collect();
    let mut rng = StdRng::seed_from_u64(0x05ee_db0b);
    let mut pairs = Vec::new();
    for _ in 0..10 {
        let chosen: Vec<&Permutation> = good.choose_multiple(&mut rng, 2).collect();
        let pair: BTreeSet<Permutation> = chosen.into_iter().cloned().collect();
        let basis = inverse_basis_set(&pair).map_err(|e| e.to_string())?.basis;
        for sigma in lengths(1..=7) {
            let image = bubble_splice(&sigma);
            ensure(avoids_all(&image, &pair) == avoids_all(&sigma, &basis), || {
                format!("{pair:?}: mismatch at {sigma}")
            })?;
        }
        pairs.push(pair.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" & "));
    }
    Ok(format!("10 pairs agree on S_1..S_7: {}", pairs.join("; ")))
}

fn c12_determinism() -> Verdict {
    let suites = [
        (Suite::Operators, 8),
        (Suite::GoodBases, 4),
        (Suite::Witnesses, 8),
        (Suite::Gamma, 8),
        (Suite::Sb, 8),
        (Suite::Counts, 7),
    ];
    for (suite, horizon) in suites {
        let mut outputs = Vec::new();
        for workers in [1, 2, 8] {
            let oracle = Oracle::new(OracleConfig { cap: 11, workers });
            let report = run_suite(suite, horizon, &oracle).map_err(|e| e.to_string())?;
            ensure(report.passed(), || report.render())?;
            outputs.push(report.render().into_bytes());
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{suite} output differs across workers"))?;
    }
    Ok("all six suites pass with byte-identical output on 1, 2 and 8 workers".into())
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("operator equivalence", c1_operator_equivalence),
        ("one-pass sortability", c2_one_pass_sortable),
        ("basis for 231", c3_basis_231),
        ("good-pattern cross-check", c4_good_patterns),
        ("non-good witnesses", c5_bad_witnesses),
        ("reduction identities", c6_reductions),
        ("special three-maxima case", c7_special_three),
        ("SB sortability and counts", c8_sb_sortable),
        ("k-pass sortability", c9_k_pass_sortable),
        ("non-good set Γ_2", c10_gamma_two),
        ("intersection of good patterns", c11_intersections),
        ("verify determinism", c12_determinism),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
