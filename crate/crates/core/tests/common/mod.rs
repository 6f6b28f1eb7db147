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

//! Brute-force oracles shared by the integration tests. None of them call
//! into the search code they check.

#![allow(dead_code)]

use crx_core::Graph;
use rand::Rng;

/// Every cycle of `g` as a sorted edge-id list, found by testing each edge
/// subset for being connected and 2-regular.
pub fn naive_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let e = g.edge_count();
    assert!(e <= 20, "naive cycle oracle needs at most 20 edges");
    let mut out = Vec::new();
    for mask in 1u32..(1 << e) {
        if mask.count_ones() < 3 {
            continue;
        }
        let edges: Vec<usize> = (0..e).filter(|&i| mask >> i & 1 == 1).collect();
        if is_single_cycle(g, &edges) {
            out.push(edges);
        }
    }
    out
}

fn is_single_cycle(g: &Graph, edges: &[usize]) -> bool {
    let mut deg = vec![0; g.n()];
    for &id in edges {
        let (u, v) = g.edge(id);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let vs = cycle_vertex_set(g, edges);
    // connected: walk from one vertex along the chosen edges
    let mut seen = vec![false; g.n()];
    let mut stack = vec![vs[0]];
    seen[vs[0]] = true;
    while let Some(x) = stack.pop() {
        for &id in edges {
            let (u, v) = g.edge(id);
            let y = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    vs.iter().all(|&v| seen[v])
}

pub fn cycle_vertex_set(g: &Graph, edges: &[usize]) -> Vec<usize> {
    let mut vs: Vec<usize> = edges
        .iter()
        .flat_map(|&id| {
            let (u, v) = g.edge(id);
            [u, v]
        })
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

pub fn naive_rainbow_cycle_exists(g: &Graph, colours: Option<&[usize]>, set: &[usize]) -> bool {
    naive_cycles(g).iter().any(|edges| {
        let vs = cycle_vertex_set(g, edges);
        let rainbow = colours.is_none_or(|c| {
            let mut seen: Vec<usize> = edges.iter().map(|&e| c[e]).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        });
        rainbow && set.iter().all(|v| vs.contains(v))
    })
}

/// Connected after deleting the vertices in `removed`.
pub fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(u, v) in g.edges() {
            let y = if u == x {
                v
            } else if v == x {
                u
            } else {
                continue;
            };
            if !removed.contains(&y) && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// At least 3 vertices, connected, and no cut vertex.
pub fn brute_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && connected_without(g, &[]) && (0..g.n()).all(|v| connected_without(g, &[v]))
}

pub fn brute_minimally_two_connected(g: &Graph) -> bool {
    brute_two_connected(g) && (0..g.edge_count()).all(|e| !brute_two_connected(&g.without_edge(e)))
}

/// Every simple path from `a` to `b` with at least one internal vertex,
/// all internal vertices outside `forbidden`, as vertex sequences.
pub fn naive_paths(g: &Graph, a: usize, b: usize, forbidden: &[bool]) -> Vec<Vec<usize>> {
    fn go(g: &Graph, b: usize, forbidden: &[bool], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        for y in 0..g.n() {
            if !g.has_edge(x, y) || path.contains(&y) {
                continue;
            }
            if y == b {
                if path.len() >= 2 {
                    let mut p = path.clone();
                    p.push(b);
                    out.push(p);
                }
            } else if !forbidden[y] {
                path.push(y);
                go(g, b, forbidden, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, b, forbidden, &mut vec![a], &mut out);
    out
}

/// Whether a (rainbow) S-subdivided closed walk through `anchors` exists,
/// by trying every combination of paths.
pub fn naive_walk_exists(g: &Graph, anchors: &[usize], colours: Option<&[usize]>) -> bool {
    let k = anchors.len();
    let mut forbidden = vec![false; g.n()];
    for &a in anchors {
        forbidden[a] = true;
    }
    let options: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|i| {
            let (a, b) = (anchors[i], anchors[(i + 1) % k]);
            if a == b {
                vec![vec![a]]
            } else {
                naive_paths(g, a, b, &forbidden)
            }
        })
        .collect();
    fn pick(
        g: &Graph,
        options: &[Vec<Vec<usize>>],
        i: usize,
        used_vertices: &mut Vec<usize>,
        used_colours: &mut Vec<usize>,
        colours: Option<&[usize]>,
    ) -> bool {
        if i == options.len() {
            return true;
        }
        for p in &options[i] {
            let internal = if p.len() > 2 { &p[1..p.len() - 1] } else { &[][..] };
            if internal.iter().any(|v| used_vertices.contains(v)) {
                continue;
            }
            let cols: Vec<usize> = match colours {
                Some(c) => p.windows(2).map(|w| c[g.edge_id(w[0], w[1]).unwrap()]).collect(),
                None => Vec::new(),
            };
            let mut all = used_colours.clone();
            all.extend(&cols);
            let mut sorted = all.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let (nv, nc) = (used_vertices.len(), used_colours.len());
            used_vertices.extend(internal);
            used_colours.extend(cols);
            if pick(g, options, i + 1, used_vertices, used_colours, colours) {
                return true;
            }
            used_vertices.truncate(nv);
            used_colours.truncate(nc);
        }
        false
    }
    pick(g, &options, 0, &mut Vec::new(), &mut Vec::new(), colours)
}

/// Surjections from `e` edges onto `r` colours divided by `r!`, by listing
/// all `r^e` maps.
pub fn brute_partitions(e: usize, r: usize) -> u128 {
    if r == 0 {
        return u128::from(e == 0);
    }
    let total = (r as u128).pow(e as u32);
    let mut surjective = 0u128;
    for mut code in 0..total {
        let mut hit = vec![false; r];
        for _ in 0..e {
            hit[(code % r as u128) as usize] = true;
            code /= r as u128;
        }
        if hit.iter().all(|&h| h) {
            surjective += 1;
        }
    }
    let fact: u128 = (1..=r as u128).product();
    surjective / fact
}

/// Random graph with each pair present with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random graph on `n` vertices with exactly `e` edges.
pub fn random_graph_with_edges<R: Rng>(rng: &mut R, n: usize, e: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let e = e.min(pairs.len());
    for i in 0..e {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
    }
    Graph::new(n, pairs[..e].iter().copied()).unwrap()
}
