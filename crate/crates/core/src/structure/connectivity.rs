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

//! Vertex connectivity.
//!
//! Two routes answer "is `g` k-connected?": direct enumeration of every
//! vertex set of size at most k-1, and Menger-style counting of internally
//! disjoint paths with a unit-capacity max flow. Small instances use the
//! first; larger ones the second.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::subsets::{binomial, Combinations};

use super::blocks::block_decomposition;

/// Enumeration is used while the number of separator candidates stays below this.
const ENUMERATION_LIMIT: u128 = 200_000;

/// `|V| > k` and removing any `k - 1` or fewer vertices leaves `g` connected.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    let candidates: u128 = (0..k).map(|i| binomial(g.n(), i)).sum();
    if candidates <= ENUMERATION_LIMIT {
        is_k_connected_by_enumeration(g, k)
    } else {
        is_k_connected_by_paths(g, k)
    }
}

pub fn is_k_connected_by_enumeration(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    let mut removed = vec![false; n];
    for size in 0..k {
        for set in Combinations::new(n, size) {
            for &v in &set {
                removed[v] = true;
            }
            let ok = g.is_connected_without(&removed);
            for &v in &set {
                removed[v] = false;
            }
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Every non-adjacent pair is joined by `k` internally disjoint paths.
pub fn is_k_connected_by_paths(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k || !g.is_connected() {
        return false;
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) && local_connectivity(g, u, v, k) < k {
                return false;
            }
        }
    }
    true
}

/// Number of internally vertex-disjoint `s`-`t` paths, capped at `cap`
/// (`s`, `t` non-adjacent).
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // split v into v_in = 2v and v_out = 2v+1 joined by a unit arc
    let n = g.n();
    let nodes = 2 * n;
    let mut head = Vec::new();
    let mut cap_of = Vec::new();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); nodes];
    let mut add_arc = |a: usize, b: usize, c: u32, head: &mut Vec<usize>, cap_of: &mut Vec<u32>| {
        out[a].push(head.len());
        head.push(b);
        cap_of.push(c);
        out[b].push(head.len());
        head.push(a);
        cap_of.push(0);
    };
    let big = u32::MAX / 2;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        add_arc(2 * v, 2 * v + 1, c, &mut head, &mut cap_of);
    }
    for &(a, b) in g.edges() {
        add_arc(2 * a + 1, 2 * b, big, &mut head, &mut cap_of);
        add_arc(2 * b + 1, 2 * a, big, &mut head, &mut cap_of);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut prev_arc = vec![usize::MAX; nodes];
    while flow < cap {
        prev_arc.iter_mut().for_each(|p| *p = usize::MAX);
        let mut queue = VecDeque::from([source]);
        let mut reached = false;
        while let Some(x) = queue.pop_front() {
            if x == sink {
                reached = true;
                break;
            }
            for &a in &out[x] {
                let y = head[a];
                if cap_of[a] > 0 && prev_arc[y] == usize::MAX && y != source {
                    prev_arc[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !reached {
            break;
        }
        let mut y = sink;
        while y != source {
            let a = prev_arc[y];
            cap_of[a] -= 1;
            cap_of[a ^ 1] += 1;
            y = head[a ^ 1];
        }
        flow += 1;
    }
    flow
}

/// `n >= 3`, connected, and a single block.
pub fn is_two_connected(g: &Graph) -> bool {
    if g.n() < 3 || !g.is_connected() {
        return false;
    }
    let d = block_decomposition(g);
    d.blocks.len() == 1 && d.blocks[0].is_two_connected()
}

/// 2-connected, and deleting any single edge destroys 2-connectivity.
pub fn is_minimally_2_connected(g: &Graph) -> bool {
    is_two_connected(g) && (0..g.edge_count()).all(|e| !is_two_connected(&g.without_edge(e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_edge() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn routes_agree_on_small_graphs() {
        let cyc = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        for k in 1..=4 {
            assert_eq!(is_k_connected_by_enumeration(&cyc, k), is_k_connected_by_paths(&cyc, k));
            let g = k4_minus_edge();
            assert_eq!(is_k_connected_by_enumeration(&g, k), is_k_connected_by_paths(&g, k));
        }
    }

    #[test]
    fn k4_minus_edge_is_not_3_connected() {
        // {0, 1} separates 2 from 3
        assert!(!is_k_connected(&k4_minus_edge(), 3));
        assert!(is_k_connected(&k4_minus_edge(), 2));
    }

    #[test]
    fn local_connectivity_counts_disjoint_paths() {
        let g = k4_minus_edge();
        assert_eq!(local_connectivity(&g, 2, 3, 10), 2);
    }
}
