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

//! Acceptance suite: one line per criterion. The test passes when exactly
//! the criteria listed in `EXPECTED_FAILURES` fail; see the README for why
//! criterion 9 cannot pass at the scaled parameters.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crx_core::constructions::{
    colour_balanced_multipartite_random, colour_bipartite, colour_bipartite_with, colour_complete_2rainbow,
    colour_complete_random, colour_cube, colour_cube_recursive, colour_join_rxk, colour_multipartite_blowup,
    colour_wheel, cube_colour_budget, minimal_2conn_obstruction, petersen_pair_obstruction, BipartiteScheme,
};
use crx_core::generators::{
    complete, complete_bipartite, cycle, hadamard_spread_vertices, hypercube, petersen, theta, wheel,
};
use crx_core::search::{
    colour_class_collision, colour_set_collision, min_cycle_length_through, rainbow_cycle_through,
    verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring, VerifyOptions,
};
use crx_core::solver::{
    count_canonical_colourings, crx_exact, crx_interval, rx_exact, stirling2, Certificate, SolveOptions,
};
use crx_core::structure::is_minimally_2_connected;
use crx_core::{Budget, EdgeColouring, Graph, Result};

use common::*;

/// Criteria that are known not to hold; each has a written analysis.
const EXPECTED_FAILURES: [usize; 1] = [9];

/// Nodes each 4-tuple walk search may spend in criterion 9.
const WALK_NODES_PER_TUPLE: u64 = 300_000;

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn check_all(failures: Vec<String>, passed: &str) -> Outcome {
    if failures.is_empty() {
        outcome(true, passed)
    } else {
        outcome(false, failures.join("; "))
    }
}

fn criterion_1() -> Result<Outcome> {
    let mut cases: Vec<(String, Graph, usize, usize)> = (3..=6)
        .map(|n| (format!("crx_1(C_{n})"), cycle(n).unwrap(), 1, n))
        .collect();
    cases.push(("crx_1(K_4)".into(), complete(4)?, 1, 3));
    cases.push(("crx_2(K_4)".into(), complete(4)?, 2, 3));
    cases.push(("crx_2(K_2,3)".into(), complete_bipartite(2, 3)?, 2, 6));
    cases.push(("crx_2(W_4)".into(), wheel(4)?, 2, 4));
    cases.push(("crx_3(W_4)".into(), wheel(4)?, 3, 4));
    let mut failures = Vec::new();
    for (name, g, k, want) in &cases {
        let res = crx_exact(g, *k, &SolveOptions::default())?;
        res.check(g, *k)?;
        let exhausted: BTreeSet<usize> = res
            .evidence
            .iter()
            .filter_map(|e| match e.certificate {
                Certificate::Exhaustion { r, .. } => Some(r),
                _ => None,
            })
            .collect();
        let every_smaller = (1..*want).all(|r| exhausted.contains(&r));
        if res.value() != Some(*want) || res.witness.is_none() || !every_smaller {
            failures.push(format!("{name}: got {:?}, exhaustion {exhausted:?}", res.value()));
        }
    }
    Ok(check_all(
        failures,
        format!(
            "{} values exact, witnesses verified, every smaller count exhausted",
            cases.len()
        )
        .as_str(),
    ))
}

fn wheel_value(n: usize, k: usize) -> usize {
    match k {
        1 => 3,
        2 if n == 3 => 3,
        2 => n.div_ceil(2) + 2,
        3 if n <= 7 => n,
        3 if n <= 11 => n - 1,
        3 => n - 2,
        _ if n < 2 * k => n + 1,
        _ => n,
    }
}

fn certified(c: &EdgeColouring, k: usize) -> Result<bool> {
    Ok(verify_k_rainbow_cycle_colouring(c, k, &VerifyOptions::parallel())?.is_certified())
}

/// Nondecreasing class-size tuples with at least three classes and total
/// at most `max_total`.
fn size_tuples(max_total: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: usize, min: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() >= 3 {
            out.push(prefix.clone());
        }
        for s in min..=left {
            prefix.push(s);
            go(prefix, left - s, s, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_total, 1, &mut out);
    out
}

fn criterion_2() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut runs = 0;
    let mut expect = |name: String, c: Result<EdgeColouring>, k: usize, want: usize, trees: bool| -> Result<()> {
        runs += 1;
        match c {
            Ok(c) => {
                let ok = if trees {
                    verify_k_rainbow_index_colouring(&c, k, &VerifyOptions::parallel())?.is_certified()
                } else {
                    certified(&c, k)?
                };
                if !ok || c.r() != want {
                    failures.push(format!("{name}: {} colours (want {want}), certified {ok}", c.r()));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        Ok(())
    };
    let mut wheel_cases: Vec<(usize, usize)> = (3..=14).flat_map(|n| (1..=3).map(move |k| (n, k))).collect();
    wheel_cases.extend((8..=12).map(|n| (n, 4)));
    for (n, k) in wheel_cases {
        expect(
            format!("wheel({n},{k})"),
            colour_wheel(n, k),
            k,
            wheel_value(n, k),
            false,
        )?;
    }
    for n in 3..=10 {
        expect(
            format!("complete_2rainbow({n})"),
            colour_complete_2rainbow(n),
            2,
            3,
            false,
        )?;
    }
    for n in 2..=10 {
        expect(format!("bipartite(2,{n},1)"), colour_bipartite(2, n, 1), 1, 4, false)?;
    }
    for n in 36..=40 {
        expect(format!("bipartite(3,{n},2)"), colour_bipartite(3, n, 2), 2, 8, false)?;
    }
    for m in 4..=6 {
        for n in m..=20 {
            expect(format!("bipartite({m},{n},2)"), colour_bipartite(m, n, 2), 2, 8, false)?;
        }
    }
    for (m, k) in [(6, 2), (9, 3)] {
        let c = colour_bipartite_with(m, m, k, BipartiteScheme::SixK);
        expect(format!("bipartite({m},{m},{k}) six-k"), c, k, 6 * k, false)?;
    }
    for sizes in size_tuples(9) {
        expect(
            format!("blowup{sizes:?}"),
            colour_multipartite_blowup(&sizes),
            1,
            3,
            false,
        )?;
    }
    for n in 2..=6 {
        expect(format!("cube({n},1)"), colour_cube(n, 1), 1, 4, false)?;
    }
    for n in 2..=5 {
        expect(format!("cube({n},3)"), colour_cube(n, 3), 3, 2 * n, false)?;
    }
    for n in 2..=3 {
        let k = 1 << (n - 1);
        expect(format!("cube({n},{k})"), colour_cube(n, k), k, 1 << n, false)?;
    }
    for (k, t) in [(2, 3), (2, 4), (3, 2), (3, 3)] {
        expect(format!("join_rxk({k},{t})"), colour_join_rxk(k, t), k, k * k - 1, true)?;
    }
    Ok(check_all(
        failures,
        &format!("{runs} constructions certified at their stated colour counts"),
    ))
}

fn criterion_3() -> Result<Outcome> {
    let mut failures = Vec::new();
    for n in 2..=4 {
        let g = hypercube(n)?;
        let len = min_cycle_length_through(&g, &[0, (1 << n) - 1], &mut Budget::unlimited())?;
        if len != Some(2 * n) {
            failures.push(format!("Q_{n}: {len:?}"));
        }
    }
    for n in 4..=10 {
        let g = wheel(n)?;
        let len = min_cycle_length_through(&g, &[0, n / 2], &mut Budget::unlimited())?;
        if len != Some(n / 2 + 2) {
            failures.push(format!("W_{n}: {len:?}"));
        }
    }
    let g = Arc::new(complete_bipartite(3, 36)?);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut set_hits, mut vector_hits) = (0, 0);
    for _ in 0..1000 {
        let colours: Vec<usize> = (0..g.edge_count()).map(|_| rng.random_range(0..7)).collect();
        let c = EdgeColouring::lenient(g.clone(), colours, 7)?;
        if let Some((x, y)) = colour_set_collision(&c, 3)? {
            let no_rainbow = rainbow_cycle_through(&c, &[x, y], &mut Budget::unlimited())?.is_none();
            set_hits += usize::from(no_rainbow);
        }
        vector_hits += usize::from(colour_class_collision(&c, 3, 2)?.is_some());
    }
    if set_hits != 1000 {
        failures.push(format!(
            "K_3,36: colour-set collision refuted only {set_hits}/1000 samples"
        ));
    }
    Ok(check_all(
        failures,
        &format!(
            "Q_2..Q_4 antipodal = 2n, W_4..W_10 = floor(n/2)+2, K_3,36 7-colourings: 1000/1000 colour-set collisions \
             without rainbow cycle ({vector_hits}/1000 identical colour vectors)"
        ),
    ))
}

fn criterion_4() -> Result<Outcome> {
    let p = petersen();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for e in 0..15 {
        for f in e + 1..15 {
            pairs += 1;
            let v = petersen_pair_obstruction(e, f)?;
            let (h, old) = p.without_vertex(v);
            let hamilton: Vec<Vec<usize>> = naive_cycles(&h)
                .into_iter()
                .filter(|c| c.len() == 9)
                .map(|c| {
                    c.iter()
                        .map(|&id| {
                            let (a, b) = h.edge(id);
                            p.edge_id(old[a], old[b]).unwrap()
                        })
                        .collect()
                })
                .collect();
            if hamilton.is_empty() || !hamilton.iter().all(|c: &Vec<usize>| c.contains(&e) && c.contains(&f)) {
                failures.push(format!("pair ({e},{f}) with v={v}"));
            }
        }
    }
    let res = crx_interval(&p, 9, &SolveOptions::default())?;
    res.check(&p, 9)?;
    if res.value() != Some(15) {
        failures.push(format!("crx_9(P_10) interval [{}, {}]", res.lower, res.upper));
    }
    Ok(check_all(
        failures,
        &format!("{pairs}/105 pairs forced by full Hamilton enumeration; crx_9(P_10) = 15"),
    ))
}

fn small_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            if mask.count_ones() <= 10 {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p);
                out.push(Graph::new(n, edges).unwrap());
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..3000 {
        let e = rng.random_range(6..=10);
        out.push(random_graph_with_edges(&mut rng, 7, e));
    }
    out
}

fn criterion_5() -> Result<Outcome> {
    let mut failures = Vec::new();
    let corpus = small_corpus();
    let disagree = corpus
        .iter()
        .filter(|g| is_minimally_2_connected(g) != brute_minimally_two_connected(g))
        .count();
    if disagree > 0 {
        failures.push(format!("{disagree} corpus graphs disagree"));
    }
    let mut graphs: Vec<(String, Graph)> = (3..=5)
        .map(|n| (format!("K_2,{n}"), complete_bipartite(2, n).unwrap()))
        .collect();
    for lengths in [[2, 3, 3], [2, 2, 4], [3, 3, 4]] {
        graphs.push((format!("theta{lengths:?}"), theta(&lengths)?));
    }
    let mut checked = 0;
    for (name, g) in &graphs {
        let cycles = naive_cycles(g);
        for e in 0..g.edge_count() {
            for f in e + 1..g.edge_count() {
                let (u, v) = minimal_2conn_obstruction(g, e, f)?;
                let through: Vec<&Vec<usize>> = cycles
                    .iter()
                    .filter(|c| {
                        let vs = cycle_vertex_set(g, c);
                        vs.contains(&u) && vs.contains(&v)
                    })
                    .collect();
                checked += 1;
                if through.is_empty() || !through.iter().all(|c| c.contains(&e) && c.contains(&f)) {
                    failures.push(format!("{name}: pair ({e},{f}) -> ({u},{v})"));
                }
            }
        }
    }
    Ok(check_all(
        failures,
        &format!(
            "{} corpus graphs agree with brute force; {checked} obstruction pairs validated",
            corpus.len()
        ),
    ))
}

fn criterion_6() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for (name, g, k, want) in [
        ("K_4, k=1", complete(4)?, 1, 3),
        ("K_4, k=2", complete(4)?, 2, 2),
        ("C_5, k=3", cycle(5)?, 3, 2),
    ] {
        let crx = crx_exact(&g, k, &SolveOptions::default())?;
        let rx = rx_exact(&g, k, &SolveOptions::default())?;
        crx.check(&g, k)?;
        rx.check(&g, k)?;
        let (a, b) = (crx.value().unwrap(), rx.value().unwrap());
        lines.push(format!("{name}: {a}-{b}"));
        if a - b != want {
            failures.push(format!("{name}: difference {}", a - b));
        }
    }
    Ok(check_all(failures, &lines.join(", ")))
}

fn criterion_7() -> Result<Outcome> {
    let complete_hit = (3..=16).find_map(|n| colour_complete_random(n, 3, 7, 2000).ok().map(|s| (n, s)));
    let multi_hit = (2..=12).find_map(|n| {
        colour_balanced_multipartite_random(2, n, 2, 7, 2000)
            .ok()
            .map(|s| (n, s))
    });
    let mut failures = Vec::new();
    let mut found = Vec::new();
    match complete_hit {
        Some((n, s)) if s.colouring.r() == 5 && certified(&s.colouring, 3)? => {
            found.push(format!("K_{n} 5-colouring at attempt {}", s.attempt))
        }
        _ => failures.push("no certified 5-colouring of K_n, n <= 16".to_string()),
    }
    match multi_hit {
        Some((n, s)) if s.colouring.r() == 4 && certified(&s.colouring, 2)? => {
            found.push(format!("K_2x{n} 4-colouring at attempt {}", s.attempt))
        }
        _ => failures.push("no certified 4-colouring of K_2xn, n <= 12".to_string()),
    }
    Ok(check_all(failures, &found.join(", ")))
}

fn criterion_8() -> Result<Outcome> {
    let vs = hadamard_spread_vertices(4, 64)?;
    let min = (0..vs.len())
        .flat_map(|i| (i + 1..vs.len()).map(move |j| (i, j)))
        .map(|(i, j)| (vs[i] ^ vs[j]).count_ones())
        .min()
        .unwrap_or(0);
    Ok(outcome(
        vs.len() == 4 && min >= 42 && vs.iter().all(|&v| v < 1u128 << 64),
        format!(
            "{} vertices of Q_64, min pairwise distance {min} (need >= 42 > 32)",
            vs.len()
        ),
    ))
}

fn criterion_9() -> Result<Outcome> {
    let (n, k, block) = (6, 4, 3);
    let rc = colour_cube_recursive(n, k, block)?;
    let c_const = cube_colour_budget(block, n) / n as u128;
    let within = (rc.colouring.r() as u128) <= c_const * n as u128;
    let sample = rc.sample_walks(200, 9, WALK_NODES_PER_TUPLE)?;
    let detail = format!(
        "{} colours <= {c_const}*{n}: {within}; palettes disjoint: {}; walks for 200 tuples: {} spliced, {} direct, \
         {} without walk, {} undecided at {WALK_NODES_PER_TUPLE} nodes",
        rc.colouring.r(),
        rc.layers_disjoint(),
        sample.spliced,
        sample.direct,
        sample.missing.len(),
        sample.undecided.len()
    );
    Ok(outcome(within && rc.layers_disjoint() && sample.all_found(), detail))
}

fn criterion_10() -> Result<Outcome> {
    let mut failures = Vec::new();
    for e in 0..=8 {
        for r in 0..=e {
            let want = brute_partitions(e, r);
            if stirling2(e, r) != want || count_canonical_colourings(e, r) != want {
                failures.push(format!("S({e},{r})"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut instances = 0;
    while instances < 500 {
        let n = rng.random_range(3..=9);
        let e = rng.random_range(n..=14.min(n * (n - 1) / 2));
        let g = Arc::new(random_graph_with_edges(&mut rng, n, e));
        let r = rng.random_range(2..=e);
        let colours: Vec<usize> = (0..e).map(|_| rng.random_range(0..r)).collect();
        let k = rng.random_range(1..=3);
        let set = rand::seq::index::sample(&mut rng, n, k).into_vec();
        let c = EdgeColouring::lenient(g.clone(), colours.clone(), r)?;
        let fast = rainbow_cycle_through(&c, &set, &mut Budget::unlimited())?;
        if let Some(w) = &fast {
            w.validate(&g, Some(&c))?;
        }
        if fast.is_some() != naive_rainbow_cycle_exists(&g, Some(&colours), &set) {
            failures.push(format!("instance {instances}"));
        }
        instances += 1;
    }
    Ok(check_all(
        failures,
        "Stirling counts for e <= 8 match; 500/500 rainbow-cycle instances match the oracle",
    ))
}

#[test]
fn acceptance() {
    let criteria: [(usize, Criterion); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = BTreeSet::new();
    for (id, run) in criteria {
        let out = run().unwrap_or_else(|e| outcome(false, format!("error: {e}")));
        println!(
            "criterion {id}: {} - {}",
            if out.pass { "PASS" } else { "FAIL" },
            out.detail
        );
        if !out.pass {
            failed.insert(id);
        }
    }
    let expected: BTreeSet<usize> = EXPECTED_FAILURES.into_iter().collect();
    assert_eq!(failed, expected, "failing criteria differ from the documented set");
}
