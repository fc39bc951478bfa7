use burnlab_core::burn::{assemble, ceil_range, simulate, validate, Coef};
use burnlab_core::cactus::{approx_cactus, CactusInstance};
use burnlab_core::ditree::{
    approx_arborescence, approx_polytree, arborescence_guess, b_cutting, centers_multirooted,
    centers_singlerooted, merge_and_burn,
};
use burnlab_core::gen::{generate, random_arborescence, random_cactus, random_polytree, GenSpec, GraphClass};
use burnlab_core::graph::{ball, bfs_distances, read_graph, write_graph, Adjacency, DirectedTree};
use burnlab_core::oracle::{baseline_3approx, baseline_guess, cycle_formula, exact_burning_number_with, DEFAULT_BUDGET};
use burnlab_core::{BurningSchedule, GuessOutcome};
use proptest::prelude::*;

fn cactus(n: usize, seed: u64, frac: f64) -> burnlab_core::UndirectedGraph {
    let mut spec = GenSpec::new(GraphClass::Cactus, n, seed);
    spec.cycle_fraction = frac;
    random_cactus(&spec).unwrap()
}

fn arborescence(n: usize, seed: u64, deg: usize) -> DirectedTree {
    let mut spec = GenSpec::new(GraphClass::Arborescence, n, seed);
    spec.max_out_degree = deg;
    random_arborescence(&spec).unwrap()
}

fn polytree(n: usize, seed: u64, deg: usize) -> DirectedTree {
    let mut spec = GenSpec::new(GraphClass::Polytree, n, seed);
    spec.max_out_degree = deg;
    random_polytree(&spec).unwrap()
}

fn exact<G: Adjacency + ?Sized>(g: &G) -> u32 {
    exact_burning_number_with(g, 14, DEFAULT_BUDGET).unwrap().b
}

/// Distinct sources with `d(x_i, x_j) >= j - i` for all `i < j`.
fn rule_holds<G: Adjacency + ?Sized>(g: &G, s: &[usize]) -> bool {
    s.iter().enumerate().all(|(i, &x)| {
        let d = bfs_distances(g, x);
        s.iter()
            .enumerate()
            .skip(i + 1)
            .all(|(j, &y)| y != x && d.get(y).is_none_or(|dy| dy as usize >= j - i))
    })
}

/// Every length-`len` sequence over `0..n`, checked with `validate`.
fn some_schedule_of_len<G: Adjacency + ?Sized>(g: &G, len: usize) -> bool {
    let n = g.vertex_count();
    let mut idx = vec![0usize; len];
    loop {
        if validate(g, &BurningSchedule(idx.clone())).is_accept() {
            return true;
        }
        let mut k = 0;
        loop {
            if k == len {
                return false;
            }
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn any_class() -> impl Strategy<Value = GraphClass> {
    prop_oneof![
        Just(GraphClass::Cactus),
        Just(GraphClass::Polytree),
        Just(GraphClass::Arborescence)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_format_round_trips(class in any_class(), n in 1usize..80, seed: u64) {
        let g = generate(&GenSpec::new(class, n, seed)).unwrap();
        let text = write_graph(&g);
        prop_assert_eq!(write_graph(&read_graph(&text).unwrap()), text);
    }

    #[test]
    fn simulate_matches_distance_rule(n in 2usize..16, seed: u64, raw in prop::collection::vec(0usize..16, 1..6)) {
        let g = cactus(n, seed, 0.4);
        let s: Vec<usize> = raw.into_iter().map(|v| v % n).collect();
        let sim = simulate(&g, &BurningSchedule(s.clone()));
        prop_assert_eq!(sim.is_ok(), rule_holds(&g, &s));
        if let Ok(sim) = sim {
            let len = s.len();
            for v in 0..n {
                let expected = s.iter().enumerate().any(|(i, &x)| {
                    bfs_distances(&g, x).get(v).is_some_and(|d| d as usize <= len - 1 - i)
                });
                prop_assert_eq!(sim.burned[v], expected);
            }
        }
    }

    #[test]
    fn directed_simulate_matches_distance_rule(n in 2usize..16, seed: u64, raw in prop::collection::vec(0usize..16, 1..6)) {
        let t = polytree(n, seed, 3);
        let s: Vec<usize> = raw.into_iter().map(|v| v % n).collect();
        let sim = simulate(&t, &BurningSchedule(s.clone()));
        prop_assert_eq!(sim.is_ok(), rule_holds(&t, &s));
        if let Ok(sim) = sim {
            let mut expected = vec![false; n];
            for (i, &x) in s.iter().enumerate() {
                for v in ball(&t, x, (s.len() - 1 - i) as u32) {
                    expected[v] = true;
                }
            }
            prop_assert_eq!(sim.burned, expected);
        }
    }

    #[test]
    fn exact_is_optimal_on_tiny_graphs(class in any_class(), n in 1usize..8, seed: u64) {
        let g = generate(&GenSpec::new(class, n, seed)).unwrap();
        let (r, shorter) = match &g {
            burnlab_core::AnyGraph::Undirected(u) => {
                let r = exact_burning_number_with(u, 14, DEFAULT_BUDGET).unwrap();
                prop_assert!(validate(u, &r.witness).is_accept());
                let shorter = r.b > 1 && some_schedule_of_len(u, r.b as usize - 1);
                (r, shorter)
            }
            burnlab_core::AnyGraph::Directed(t) => {
                let r = exact_burning_number_with(t, 14, DEFAULT_BUDGET).unwrap();
                prop_assert!(validate(t, &r.witness).is_accept());
                let shorter = r.b > 1 && some_schedule_of_len(t, r.b as usize - 1);
                (r, shorter)
            }
        };
        prop_assert_eq!(r.witness.len(), r.b as usize);
        prop_assert!(!shorter);
    }

    #[test]
    fn cutting_composes(n in 1usize..40, seed: u64, a in 0u32..7, c in 0u32..7, arb: bool) {
        let t = if arb { arborescence(n, seed, 3) } else { polytree(n, seed, 3) };
        prop_assert_eq!(b_cutting(&t, a).cutting(c), b_cutting(&t, a + c));
    }

    #[test]
    fn singlerooted_partitions_into_short_subtrees(n in 1usize..60, seed: u64, b in 1u32..6, deg in 1usize..5) {
        let t = arborescence(n, seed, deg);
        let bs = centers_singlerooted(&t, b).unwrap();
        let mut is_center = vec![false; n];
        for &c in &bs {
            prop_assert!(!is_center[c]);
            is_center[c] = true;
        }
        // Walking up from any vertex reaches a center within b - 1 steps.
        for v in 0..n {
            let mut x = v;
            let mut d = 0;
            while !is_center[x] {
                x = t.in_neighbors(x)[0];
                d += 1;
            }
            prop_assert!(d < b);
        }
    }

    #[test]
    fn merge_plan_conserves_ranges(n in 1usize..60, seed: u64, b in 1u32..8, deg in 1usize..5) {
        let t = arborescence(n, seed, deg);
        let bs = centers_singlerooted(&t, b).unwrap();
        let GuessOutcome::Success(plan) = merge_and_burn(&t, b, &bs).unwrap() else {
            return Ok(());
        };
        let top = ceil_range(b, Coef::ARB_BUDGET);
        let big = ceil_range(b, Coef::MERGE_RANGE);
        let mut used: Vec<u32> = plan.unmerged.iter().map(|a| a.range)
            .chain(plan.merges.iter().map(|m| m.range))
            .chain(plan.unused.iter().copied())
            .collect();
        used.sort_unstable();
        prop_assert_eq!(used, (0..=top).collect::<Vec<_>>());
        prop_assert_eq!(plan.unmerged.len() + 2 * plan.merges.len(), bs.len());
        prop_assert!(plan.unmerged.iter().all(|a| a.range >= b));
        for m in &plan.merges {
            prop_assert!(m.range >= big);
            let reach = ball(&t, m.lca, big);
            for v in ball(&t, m.pair.0, b - 1).into_iter().chain(ball(&t, m.pair.1, b - 1)) {
                prop_assert!(reach.binary_search(&v).is_ok());
            }
        }
        let cs = plan.center_sets();
        let s = assemble(&t, &cs, cs.tight_length()).unwrap();
        prop_assert!(validate(&t, &s).is_accept());
    }

    #[test]
    fn drivers_respect_their_bounds(n in 1usize..150, seed: u64, frac in 0.0f64..0.6, deg in 1usize..5) {
        let g = cactus(n, seed, frac);
        let a = approx_cactus(&g).unwrap();
        prop_assert!(validate(&g, &a.schedule).is_accept());
        let b = a.b_star;
        let q = ceil_range(b, Coef::QUARTER);
        let bound = (q + ceil_range(b, Coef::SEVEN_QUARTERS)).max(q + ceil_range(b, Coef::THREE_QUARTERS) + 2 * b - 2);
        prop_assert!(a.schedule.len() as u32 <= bound.max(b));

        let base = baseline_3approx(&g).unwrap();
        prop_assert!(validate(&g, &base.schedule).is_accept());
        prop_assert!(base.schedule.len() as u32 <= 3 * base.b_star - 2);

        let t = polytree(n, seed, deg);
        let a = approx_polytree(&t).unwrap();
        prop_assert!(validate(&t, &a.schedule).is_accept());
        prop_assert!(a.schedule.len() as u32 <= 3 * a.b_star);

        let t = arborescence(n, seed, deg);
        let a = approx_polytree(&t).unwrap();
        prop_assert!(validate(&t, &a.schedule).is_accept());
        prop_assert!(a.schedule.len() as u32 <= 2 * a.b_star);
        let a = approx_arborescence(&t).unwrap();
        prop_assert!(validate(&t, &a.schedule).is_accept());
        prop_assert!(a.schedule.len() as u32 <= ceil_range(a.b_star, Coef::ARB_BUDGET) + 1);
    }

    #[test]
    fn bad_guesses_are_sound(n in 1usize..13, seed: u64, frac in 0.0f64..0.8, deg in 1usize..5) {
        let g = cactus(n, seed, frac);
        let e = exact(&g);
        let inst = CactusInstance::new(&g).ok();
        for b in 1..=n as u32 + 1 {
            if let Some(inst) = &inst {
                prop_assert!(!inst.burn_guess(b).is_bad_guess() || b < e);
            }
            prop_assert!(!baseline_guess(&g, b).is_bad_guess() || b < e);
        }
        for t in [polytree(n, seed, deg), arborescence(n, seed, deg)] {
            let e = exact(&t);
            for b in 1..=n as u32 + 1 {
                prop_assert!(!centers_multirooted(&t, b).unwrap().is_bad_guess() || b < e);
                if t.is_arborescence() {
                    prop_assert!(!arborescence_guess(&t, b).unwrap().is_bad_guess() || b < e);
                }
            }
        }
    }
}

#[test]
fn closed_form_on_paths_and_cycles() {
    for n in 1..=14 {
        assert_eq!(exact(&burnlab_core::UndirectedGraph::path(n)), cycle_formula(n), "P{n}");
    }
    for n in 3..=14 {
        let c = burnlab_core::UndirectedGraph::cycle(n);
        let a = approx_cactus(&c).unwrap();
        assert_eq!(a.schedule.len() as u32, cycle_formula(n), "C{n}");
        assert!(validate(&c, &a.schedule).is_accept());
    }
}
