// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

mod common;

use std::sync::Arc;

use proptest::prelude::*;

use crx_core::search::{
    find_subdivided_closed_walk, min_cycle_length_through, rainbow_cycle_through, verify_k_rainbow_cycle_colouring,
    VerifyOptions,
};
use crx_core::solver::{
    count_canonical_colourings, crx_exact, crx_lower_bound_distance, rx_exact, stirling2, SolveOptions,
};
use crx_core::structure::{in_family_fk, is_minimally_2_connected, is_two_connected};
use crx_core::{Budget, EdgeColouring, Error, Graph};

use common::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

/// Graph with a colouring using at most `max_r` colours.
fn coloured_strategy(max_n: usize, max_r: usize) -> impl Strategy<Value = (Graph, Vec<usize>, usize)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let e = g.edge_count();
        (Just(g), 1..=max_r).prop_flat_map(move |(g, r)| (Just(g), proptest::collection::vec(0..r, e), Just(r)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rainbow_cycle_search_matches_oracle(
        (g, colours, r) in coloured_strategy(7, 6),
        seed in any::<u64>(),
    ) {
        prop_assume!(g.edge_count() <= 14);
        let c = EdgeColouring::lenient(Arc::new(g.clone()), colours.clone(), r).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let k = rand::Rng::random_range(&mut rng, 1..=3.min(g.n()));
        let set = rand::seq::index::sample(&mut rng, g.n(), k).into_vec();
        let found = rainbow_cycle_through(&c, &set, &mut Budget::unlimited()).unwrap();
        prop_assert_eq!(found.is_some(), naive_rainbow_cycle_exists(&g, Some(&colours), &set));
        if let Some(w) = found {
            w.validate(&g, Some(&c)).unwrap();
            prop_assert!(set.iter().all(|&v| w.contains_vertex(v)));
        }
    }

    #[test]
    fn shortest_cycle_length_matches_oracle(g in graph_strategy(7), k in 1usize..=3) {
        prop_assume!(g.edge_count() <= 14 && k <= g.n());
        let set: Vec<usize> = (0..k).collect();
        let naive = naive_cycles(&g)
            .into_iter()
            .filter(|edges| {
                let vs = cycle_vertex_set(&g, edges);
                set.iter().all(|v| vs.contains(v))
            })
            .map(|edges| edges.len())
            .min();
        prop_assert_eq!(min_cycle_length_through(&g, &set, &mut Budget::unlimited()).unwrap(), naive);
    }

    #[test]
    fn verification_ignores_colour_names(
        (g, colours, r) in coloured_strategy(6, 5),
        k in 1usize..=3,
        shift in 0usize..5,
    ) {
        let c = EdgeColouring::lenient(Arc::new(g.clone()), colours, r).unwrap();
        let perm: Vec<usize> = (0..r).map(|i| (i + shift) % r).collect();
        let p = c.permuted(&perm).unwrap();
        let opts = VerifyOptions::default();
        match (verify_k_rainbow_cycle_colouring(&c, k, &opts), verify_k_rainbow_cycle_colouring(&p, k, &opts)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert!(false, "verifiers disagree: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn verification_counterexample_is_real(
        (g, colours, r) in coloured_strategy(6, 4),
        k in 1usize..=3,
    ) {
        prop_assume!(g.edge_count() <= 14);
        let c = EdgeColouring::lenient(Arc::new(g.clone()), colours.clone(), r).unwrap();
        if let Ok(rep) = verify_k_rainbow_cycle_colouring(&c, k, &VerifyOptions::default()) {
            match rep.bad_set {
                Some(set) => prop_assert!(!naive_rainbow_cycle_exists(&g, Some(&colours), &set)),
                None => prop_assert!(crx_core::subsets::Combinations::new(g.n(), k)
                    .all(|s| naive_rainbow_cycle_exists(&g, Some(&colours), &s))),
            }
        }
    }

    #[test]
    fn walk_search_matches_oracle(
        (g, colours, r) in coloured_strategy(7, 8),
        anchors in proptest::collection::vec(0usize..7, 1..=4),
        coloured in any::<bool>(),
    ) {
        prop_assume!(anchors.iter().all(|&a| a < g.n()));
        let c = EdgeColouring::lenient(Arc::new(g.clone()), colours.clone(), r).unwrap();
        let col = coloured.then_some(&c);
        let found = find_subdivided_closed_walk(&g, &anchors, col, &mut Budget::unlimited());
        let expected = naive_walk_exists(&g, &anchors, coloured.then_some(colours.as_slice()));
        match found {
            Ok(w) => {
                prop_assert!(expected);
                w.validate(&g, col).unwrap();
            }
            Err(Error::WalkNotFound) => prop_assert!(!expected),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn minimal_two_connectivity_matches_definition(g in graph_strategy(7)) {
        prop_assert_eq!(is_two_connected(&g), brute_two_connected(&g));
        prop_assert_eq!(is_minimally_2_connected(&g), brute_minimally_two_connected(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solver_values_are_consistent(g in graph_strategy(5)) {
        prop_assume!(is_two_connected(&g) && g.edge_count() <= 8);
        let opts = SolveOptions::default();
        let mut prev = 0;
        for k in 1..=g.n() {
            if !in_family_fk(&g, k) {
                break;
            }
            let res = crx_exact(&g, k, &opts).unwrap();
            res.check(&g, k).unwrap();
            let crx = res.value().unwrap();
            prop_assert!(crx >= prev, "crx_{k} = {crx} < crx_{} = {prev}", k - 1);
            prev = crx;
            let bound = crx_lower_bound_distance(&g, k, &mut Budget::unlimited()).unwrap();
            prop_assert!(crx >= bound.bound);
            let rx = rx_exact(&g, k, &opts).unwrap();
            rx.check(&g, k).unwrap();
            prop_assert!(crx > rx.value().unwrap());
        }
    }
}

#[test]
fn canonical_counts_are_stirling_numbers() {
    for e in 0..=8 {
        for r in 0..=e {
            let brute = brute_partitions(e, r);
            assert_eq!(stirling2(e, r), brute, "S({e}, {r})");
            assert_eq!(count_canonical_colourings(e, r), brute, "enumeration ({e}, {r})");
        }
    }
}
