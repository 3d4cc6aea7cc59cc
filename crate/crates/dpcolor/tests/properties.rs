//! Randomized property tests for the core invariants: file-format round
//! trips, group laws of the edge signs, switching invariance, and the
//! combinatorial identities of the embedding.

use std::collections::BTreeMap;

use dpcolor::gen::generate;
use dpcolor::hosts::{cycle_host, randomize_switching};
use dpcolor::perm::{Perm, ALL_PERMS};
use dpcolor::solver;
use dpcolor::spg;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm_strategy() -> impl Strategy<Value = Perm> {
    (0..ALL_PERMS.len()).prop_map(|i| ALL_PERMS[i])
}

proptest! {
    #[test]
    fn perm_group_laws(a in perm_strategy(), b in perm_strategy(), c in perm_strategy()) {
        prop_assert_eq!(a.compose(b).compose(c), a.compose(b.compose(c)));
        prop_assert!(a.compose(a.inverse()).is_identity());
        prop_assert!(a.inverse().compose(a).is_identity());
        for col in 0..3u8 {
            prop_assert_eq!(a.compose(b).apply(col), a.apply(b.apply(col)));
        }
        prop_assert_eq!(Perm::parse(a.word()), Some(a));
    }

    #[test]
    fn file_format_round_trips(seed in 0u64..500, boundary in prop::option::of(5usize..=12)) {
        let sg = generate(40, seed, boundary).unwrap();
        let text = spg::emit(&sg);
        let back = spg::parse(&text).unwrap();
        prop_assert_eq!(spg::emit(&back), text);
        prop_assert_eq!(back.graph.rotations(), sg.graph.rotations());
        prop_assert_eq!(back.graph.outer_face(), sg.graph.outer_face());
        prop_assert_eq!(&back.precolor, &sg.precolor);
        for (&(u, v), &p) in sg.sig.arcs() {
            prop_assert_eq!(back.sigma(u, v), p);
        }
    }

    #[test]
    fn generation_is_deterministic_and_clean(seed in 0u64..500) {
        let a = generate(40, seed, None).unwrap();
        let b = generate(40, seed, None).unwrap();
        prop_assert_eq!(spg::emit(&a), spg::emit(&b));
        prop_assert!(a.graph.forbidden_cycles().is_empty());
        prop_assert!(a.graph.boundary_audit().boundary_is_cycle);
    }

    #[test]
    fn euler_formula_holds(seed in 0u64..300) {
        let sg = generate(40, seed, None).unwrap();
        let g = &sg.graph;
        prop_assert_eq!(g.n() + g.faces().len(), g.m() + 2);
        let walk_total: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(walk_total, 2 * g.m());
    }

    #[test]
    fn switching_preserves_colorability(seed in 0u64..200, tau in perm_strategy(), at in 0usize..20) {
        // Counting enumerates every coloring, so keep the instances small.
        let sg = generate(40, seed, Some(12)).unwrap();
        let n = sg.graph.n();
        let before = solver::count(&sg);
        let mut switched = sg.clone();
        switched.switch(at % n, tau);
        // A switching at a precolored vertex changes which colorings are
        // admissible; only compare when the vertex is free.
        if !sg.precolor.contains_key(&(at % n)) {
            prop_assert_eq!(solver::count(&switched), before);
        }
    }

    #[test]
    fn switching_transforms_solutions(seed in 0u64..200, tau in perm_strategy(), at in 0usize..20) {
        let sg = generate(40, seed, None).unwrap();
        let v = at % sg.graph.n();
        if let Some(phi) = solver::solve(&sg) {
            let mut switched = sg.clone();
            switched.switch(v, tau);
            let mut phi2 = phi.clone();
            phi2[v] = tau.apply(phi[v]);
            prop_assert!(switched.is_proper(&phi2));
        }
    }

    #[test]
    fn cycle_sign_survives_many_switchings(l in 5usize..=12, seed in 0u64..100) {
        if l == 6 || l == 8 {
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sg = cycle_host(l);
        dpcolor::gen::randomize_signature(&mut sg, &mut rng);
        let cycle: Vec<usize> = (0..l).collect();
        let sign = sg.is_positive(&cycle);
        for _ in 0..10 {
            randomize_switching(&mut sg, &mut rng);
            prop_assert_eq!(sg.is_positive(&cycle), sign);
        }
    }

    #[test]
    fn solver_agrees_with_itself(seed in 0u64..200) {
        let sg = generate(40, seed, Some(12)).unwrap();
        let cnt = solver::count(&sg);
        let sol = solver::solve(&sg);
        prop_assert_eq!(cnt > 0, sol.is_some());
        if let Some(phi) = sol {
            prop_assert!(sg.is_proper(&phi));
        }
    }

    #[test]
    fn discharge_is_conservative(seed in 0u64..200) {
        let sg = generate(40, seed, None).unwrap();
        let r = dpcolor::discharge::discharge(&sg).unwrap();
        prop_assert!(r.initial_zero);
        prop_assert!(r.final_zero);
    }

    #[test]
    fn free_colors_is_sound(seed in 0u64..100, v in 0usize..12) {
        let sg = generate(40, seed, Some(12)).unwrap();
        let v = v % sg.graph.n();
        let fixed: BTreeMap<usize, u8> = sg.precolor.clone();
        for c in solver::free_colors(&sg, &fixed, v) {
            let mut with = fixed.clone();
            with.insert(v, c);
            prop_assert!(solver::solve_with(&sg, &with).is_some());
        }
    }
}
