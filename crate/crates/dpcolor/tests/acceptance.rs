//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails or exceeds its time budget.
//! Tolerances and budgets are pinned in code next to each criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use dpcolor::configs::builders::{build_a1, build_i};
use dpcolor::configs::catalog::Catalog;
use dpcolor::configs::kernel::verify_kernel;
use dpcolor::configs::matcher::find_occurrences;
use dpcolor::discharge::{discharge, witness};
use dpcolor::gen::generate;
use dpcolor::hosts::{self, adversarial_suite, randomize_switching, recolor_gadget};
use dpcolor::perm::ALL_PERMS;
use dpcolor::rat::Rat;
use dpcolor::signing::SignedPlaneGraph;
use dpcolor::solver;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn run(
        &mut self,
        id: u32,
        name: &str,
        budget: Duration,
        f: impl FnOnce() -> Result<(), String>,
    ) {
        let start = Instant::now();
        let mut result = f();
        let elapsed = start.elapsed();
        if result.is_ok() && elapsed > budget {
            result = Err(format!("took {elapsed:?}, budget {budget:?}"));
        }
        match &result {
            Ok(()) => println!("criterion {id:2} {name}: PASS ({elapsed:?})"),
            Err(e) => println!("criterion {id:2} {name}: FAIL ({e})"),
        }
        if let Err(e) = result {
            self.failures.push(format!("{id} {name}: {e}"));
        }
    }
}

/// A deterministic pool of generated instances shared by several criteria.
fn generated_pool(count: usize) -> Vec<SignedPlaneGraph> {
    (0..count as u64)
        .map(|seed| generate(40, seed, None).expect("generation within budget"))
        .collect()
}

fn claim_ok(r: &dpcolor::discharge::DischargeReport, name: &str) -> bool {
    r.claims.iter().any(|c| c.name == name && c.ok)
}

#[test]
fn acceptance() {
    let mut t = Tally { failures: Vec::new() };
    let cat = Catalog::embedded();

    // 1. Recoloring gadget, exhaustively: all 6 edge signs x 9 pendant
    // precolorings. Straight edge with differing pendant colors leaves the
    // apex exactly 3 colors; any non-identity sign leaves at least 2.
    t.run(1, "recoloring-gadget-exhaustive", Duration::from_secs(1), || {
        for sigma in ALL_PERMS {
            for cu in 0..3u8 {
                for cv in 0..3u8 {
                    let sg = recolor_gadget(sigma, cu, cv);
                    let fixed = sg.precolor.clone();
                    let free = solver::free_colors(&sg, &fixed, 2).len();
                    if sigma.is_identity() && cu != cv && free != 3 {
                        return Err(format!("straight, {cu}/{cv}: {free} free colors"));
                    }
                    if !sigma.is_identity() && free < 2 {
                        return Err(format!("sign {}, {cu}/{cv}: {free} free colors", sigma.word()));
                    }
                }
            }
        }
        Ok(())
    });

    // 2. Chain kernels: I_k for k in {1,2,3} retains >= 2 port colors over
    // all 5^k negative-triangle signature classes x 3^(k+1) frontier tuples;
    // the degree-3-port variant a-1 always re-extends.
    t.run(2, "chain-kernels", Duration::from_secs(60), || {
        for k in 1..=3usize {
            let rep = verify_kernel(&build_i(k)).map_err(|e| format!("I(k={k}): {e:?}"))?;
            if !rep.ok {
                return Err(format!("I(k={k}) has {} failures", rep.failure_count));
            }
            if rep.signature_classes != 5u64.pow(k as u32) {
                return Err(format!("I(k={k}) classes {}", rep.signature_classes));
            }
            if rep.tuples_checked != 5u64.pow(k as u32) * 3u64.pow(k as u32 + 1) {
                return Err(format!("I(k={k}) tuples {}", rep.tuples_checked));
            }
            let rep = verify_kernel(&build_a1(k)).map_err(|e| format!("a-1(k={k}): {e:?}"))?;
            if !rep.ok {
                return Err(format!("a-1(k={k}) has {} failures", rep.failure_count));
            }
        }
        Ok(())
    });

    // 3. Catalog kernels, each within 5 minutes.
    for (i, name) in ["b-1", "d-1", "e-1", "g-1", "h-1"].iter().enumerate() {
        t.run(
            3,
            &format!("catalog-kernel-{name}"),
            Duration::from_secs(300),
            || {
                let p = cat.instantiate(name, &[]).map_err(|e| format!("{e:?}"))?;
                let rep = verify_kernel(&p).map_err(|e| format!("{e:?}"))?;
                if rep.ok {
                    Ok(())
                } else {
                    Err(format!("{} failures", rep.failure_count))
                }
            },
        );
        let _ = i;
    }

    // Shared instance pool for criteria 4-7 and 12.
    let pool = generated_pool(100);
    let reports: Vec<_> = pool
        .iter()
        .map(|sg| discharge(sg).expect("no overflow"))
        .collect();

    // 4. Conservation: account sums are exactly zero before and after the
    // rules on >= 100 generated instances with n <= 40.
    t.run(4, "conservation", Duration::from_secs(60), || {
        for (i, r) in reports.iter().enumerate() {
            if !(r.initial_zero && r.final_zero && claim_ok(r, "conservation")) {
                return Err(format!("instance {i} breaks conservation"));
            }
        }
        Ok(())
    });

    // 5. Every internal 5+-face ends at exactly 0 on every instance.
    t.run(5, "internal-big-faces-zero", Duration::from_secs(10), || {
        for (i, r) in reports.iter().enumerate() {
            if !claim_ok(r, "big-face-zero") {
                return Err(format!("instance {i} has a nonzero internal big face"));
            }
        }
        Ok(())
    });

    // 6. The outer face ends at exactly 4 - d(f0)/3 whenever d(f0) <= 12.
    t.run(6, "outer-face-exact", Duration::from_secs(60), || {
        let mut checked = 0usize;
        for seed in 0..60u64 {
            let sg = generate(40, seed, Some(12)).map_err(|e| format!("{e:?}"))?;
            let d = sg.graph.faces()[sg.graph.outer_face()].len() as i64;
            if d > 12 {
                continue;
            }
            let r = discharge(&sg).map_err(|e| format!("{e:?}"))?;
            let want = Rat::int(4).sub(Rat::new(d, 3)).map_err(|e| format!("{e:?}"))?;
            let got = r.face_final[sg.graph.outer_face()];
            if got != want {
                return Err(format!("seed {seed}: outer face {got}, want {want}"));
            }
            checked += 1;
        }
        if checked < 30 {
            return Err(format!("only {checked} small-boundary instances checked"));
        }
        Ok(())
    });

    // 7. Snowflake stats: the integer identity, the inequality, and the
    // evenness of the positive/negative triangle counts hold on every
    // accepted snowflake of every instance.
    t.run(7, "snowflake-stats", Duration::from_secs(30), || {
        let mut seen = 0usize;
        for (i, sg) in pool.iter().enumerate() {
            let cls = dpcolor::classify::classify_full(sg);
            for (j, s) in cls.snowflakes.iter().enumerate() {
                if !(s.eq3_holds() && s.eq4_holds() && s.evenness_holds()) {
                    return Err(format!("instance {i}, snowflake {j} breaks stats"));
                }
                seen += 1;
            }
        }
        if seen == 0 {
            return Err("no snowflakes in the pool".into());
        }
        Ok(())
    });

    // 8. Solver equivalence against naive 3^n enumeration on 100 random
    // signed instances with n <= 10, exact.
    t.run(8, "solver-oracle", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for case in 0..100 {
            let l = rng.gen_range(3..=10usize);
            let mut sg = hosts::cycle_host(l);
            dpcolor::gen::randomize_signature(&mut sg, &mut rng);
            if rng.gen_bool(0.5) {
                sg.precolor.insert(rng.gen_range(0..l), rng.gen_range(0..3u8));
            }
            let naive = naive_count(&sg);
            let fast = solver::count(&sg);
            if naive != fast {
                return Err(format!("case {case}: naive {naive}, solver {fast}"));
            }
            match solver::solve(&sg) {
                Some(phi) => {
                    if naive == 0 || !proper_with_precolor(&sg, &phi) {
                        return Err(format!("case {case}: bogus solution"));
                    }
                }
                None => {
                    if naive != 0 {
                        return Err(format!("case {case}: missed {naive} colorings"));
                    }
                }
            }
        }
        Ok(())
    });

    // 9. Boundary extension at desk scale: >= 500 generated instances with
    // chordless boundary <= 12, sampled random proper boundary precolorings,
    // zero extension failures.
    t.run(9, "boundary-extension", Duration::from_secs(600), || {
        for seed in 0..500u64 {
            let sg = generate(40, seed, Some(12)).map_err(|e| format!("{e:?}"))?;
            let audit = sg.graph.boundary_audit();
            if !(audit.boundary_is_cycle && audit.chords.is_empty() && audit.boundary_len <= 12) {
                return Err(format!("seed {seed}: boundary not clean"));
            }
            let rep = solver::extend_boundary(&sg, Some((20, seed)));
            if !rep.all_extended() {
                return Err(format!("seed {seed}: {} failures", rep.failures.len()));
            }
        }
        Ok(())
    });

    // 10. Switching invariance: cycle sign, occurrence sets, and
    // satisfiability are unchanged under 100 random switchings per instance.
    t.run(10, "switching-invariance", Duration::from_secs(120), || {
        let patterns = cat.default_instances();
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let instances = vec![
            hosts::triangle_ring([6, 6, 6], true),
            hosts::bowtie_ring([6, 5, 6, 5], true, false),
            generate(40, 7, None).map_err(|e| format!("{e:?}"))?,
        ];
        for (i, base) in instances.iter().enumerate() {
            let cycle: Vec<usize> = base.graph.faces()[0].walk().to_vec();
            let sign0 = base.is_positive(&cycle);
            let occ0 = occurrence_set(&patterns, base);
            let sat0 = solver::solve(base).is_some();
            let mut sg = base.clone();
            for step in 0..100 {
                randomize_switching(&mut sg, &mut rng);
                if sg.is_positive(&cycle) != sign0 {
                    return Err(format!("instance {i}, step {step}: cycle sign flipped"));
                }
                if occurrence_set(&patterns, &sg) != occ0 {
                    return Err(format!("instance {i}, step {step}: occurrences changed"));
                }
                if (solver::solve(&sg).is_some()) != sat0 {
                    return Err(format!("instance {i}, step {step}: satisfiability changed"));
                }
            }
        }
        Ok(())
    });

    // 11. Witness property: on >= 50 adversarial gadget hosts, every
    // negative final charge is explained by a matched configuration or a
    // structural violation; zero unexplained.
    t.run(11, "witness-explains-negatives", Duration::from_secs(300), || {
        let suite = adversarial_suite(50, 11);
        for (i, sg) in suite.iter().enumerate() {
            let w = witness(sg, &cat).map_err(|e| format!("{e:?}"))?;
            if w.negatives.is_empty() {
                return Err(format!("host {i} has no negative account"));
            }
            if w.unexplained != 0 {
                return Err(format!("host {i}: {} unexplained negatives", w.unexplained));
            }
        }
        Ok(())
    });

    // 12. Per-vertex-per-string outflow cap: every sender pays each string
    // at most 1/4 in total, exactly, on every instance whose strings satisfy
    // the structural length bound.
    t.run(12, "string-outflow-cap", Duration::from_secs(10), || {
        let cap = Rat::new(1, 4);
        let suite_reports: Vec<_> = adversarial_suite(50, 11)
            .iter()
            .map(|sg| discharge(sg).expect("no overflow"))
            .collect();
        for (i, r) in reports.iter().chain(suite_reports.iter()).enumerate() {
            for st in &r.string_totals {
                if st.modeled && st.total > cap {
                    return Err(format!(
                        "instance {i}: vertex {} pays {} to {:?}",
                        st.sender, st.total, st.string
                    ));
                }
            }
            if !claim_ok(r, "string-cap") {
                return Err(format!("instance {i}: string-cap claim failed"));
            }
        }
        Ok(())
    });

    assert!(
        t.failures.is_empty(),
        "acceptance failures:\n{}",
        t.failures.join("\n")
    );
}

/// Counts proper colorings by brute force over all 3^n assignments,
/// honoring any precolored vertices.
fn naive_count(sg: &SignedPlaneGraph) -> u64 {
    let n = sg.graph.n();
    let mut phi = vec![0u8; n];
    let mut total = 0u64;
    loop {
        if proper_with_precolor(sg, &phi) {
            total += 1;
        }
        // Odometer increment.
        let mut i = 0;
        loop {
            if i == n {
                return total;
            }
            phi[i] += 1;
            if phi[i] < 3 {
                break;
            }
            phi[i] = 0;
            i += 1;
        }
    }
}

fn proper_with_precolor(sg: &SignedPlaneGraph, phi: &[u8]) -> bool {
    sg.precolor.iter().all(|(&v, &c)| phi[v] == c) && sg.is_proper(phi)
}

/// Canonical set of configuration occurrences of all default catalog
/// patterns in a host.
fn occurrence_set(
    patterns: &[dpcolor::configs::ConfigPattern],
    sg: &SignedPlaneGraph,
) -> BTreeSet<(String, Vec<usize>)> {
    let mut out = BTreeSet::new();
    for p in patterns {
        for occ in find_occurrences(p, sg) {
            out.insert((occ.pattern.clone(), occ.map.clone()));
        }
    }
    out
}
