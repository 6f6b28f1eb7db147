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

use std::collections::VecDeque;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::generators::path_cycle_join;
use crate::graph::Graph;
use crate::structure::{block_decomposition, ear_decomposition, every_vertex_on_cycle, is_two_connected};

use super::{build, certify, certify_index};

/// Shortest `from`-`to` path avoiding `blocked` vertices and `banned` edges,
/// as edge ids.
fn bfs_path(g: &Graph, from: usize, to: usize, blocked: &[bool], banned: &[bool]) -> Option<Vec<usize>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut edges = Vec::new();
            let mut y = to;
            while let Some((p, e)) = prev[y] {
                edges.push(e);
                y = p;
            }
            edges.reverse();
            return Some(edges);
        }
        for &(w, e) in g.neighbours(x) {
            if !seen[w] && !blocked[w] && !banned[e] {
                seen[w] = true;
                prev[w] = Some((x, e));
                queue.push_back(w);
            }
        }
    }
    None
}

/// Every edge except `skip` gets its own colour, in id order.
fn rainbow_except(g: &Graph, skip: usize) -> Vec<usize> {
    (0..g.edge_count())
        .map(|e| if e < skip { e } else { e.saturating_sub(1) })
        .collect()
}

pub fn save_one_crx1_colouring(g: &Graph) -> Result<EdgeColouring> {
    if !every_vertex_on_cycle(g) {
        return Err(Error::NotInFamily { k: 1 });
    }
    let m = g.edge_count();
    if is_two_connected(g) {
        let ears = ear_decomposition(g)?;
        let Some(last) = ears.ears.last() else {
            return Err(Error::IsCycle);
        };
        let ear_edges = g.path_edges(last).expect("ears are paths of the graph");
        let e = *ear_edges.iter().min().expect("ears have an edge");
        let mut blocked = vec![false; g.n()];
        for &v in &last[1..last.len() - 1] {
            blocked[v] = true;
        }
        let mut banned = vec![false; m];
        for &x in &ear_edges {
            banned[x] = true;
        }
        let (u, v) = (last[0], last[last.len() - 1]);
        let back = bfs_path(g, u, v, &blocked, &banned).expect("the graph before the last ear is 2-connected");
        let mut colours = rainbow_except(g, e);
        let mut taken = vec![false; m - 1];
        for &x in ear_edges.iter().chain(&back) {
            if x != e {
                taken[colours[x]] = true;
            }
        }
        colours[e] = taken.iter().position(|&t| !t).expect("some colour lies off the cycle");
        return build(g.clone(), colours, m - 1);
    }
    let d = block_decomposition(g);
    let blocks: Vec<_> = d.blocks.iter().filter(|b| !b.edges.is_empty()).collect();
    if blocks.len() < 2 {
        return Err(Error::NotInFamily { k: 1 });
    }
    let mut colours = vec![0; m];
    let mut next = 0;
    for b in &blocks {
        for &x in &b.edges {
            colours[x] = next;
            next += 1;
        }
    }
    let shared = colours[blocks[0].edges[0]];
    let merged = blocks[1].edges[0];
    colours[merged] = shared;
    // close the gap left by the merged edge's old colour
    let gap = blocks[0].edges.len();
    for c in colours.iter_mut() {
        if *c > gap {
            *c -= 1;
        }
    }
    build(g.clone(), colours, m - 1)
}

/// A rainbow cycle colouring of a non-cycle `G` in `F_1` with `e(G) - 1`
/// colours: exactly one colour is used twice.
pub fn colour_save_one_crx1(g: &Graph) -> Result<EdgeColouring> {
    certify(save_one_crx1_colouring(g)?, 1, "save-one (k=1)")
}

pub fn save_one_crx2_colouring(g: &Graph) -> Result<EdgeColouring> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let e = (0..g.edge_count())
        .find(|&e| is_two_connected(&g.without_edge(e)))
        .ok_or(Error::MinimallyTwoConnected)?;
    let mut colours = rainbow_except(g, e);
    colours[e] = 0;
    build(g.clone(), colours, g.edge_count() - 1)
}

/// A 2-rainbow cycle colouring of a 2-connected, not minimally 2-connected
/// `G` with `e(G) - 1` colours.
pub fn colour_save_one_crx2(g: &Graph) -> Result<EdgeColouring> {
    certify(save_one_crx2_colouring(g)?, 2, "save-one (k=2)")
}

pub fn join_rxk_colouring(k: usize, t: usize) -> Result<EdgeColouring> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("join colouring needs k >= 2, got {k}")));
    }
    let g = path_cycle_join(k, t)?;
    let p = k - 1;
    let colours = g
        .edges()
        .iter()
        .map(|&(a, b)| match (a < p, b < p) {
            (true, true) => k * k - k + a,
            (true, false) => (b - p) % k + a * k,
            _ => k * k - 2,
        })
        .collect();
    build(g, colours, k * k - 1)
}

/// The path-cycle join coloured with `k^2 - 1` colours so that any `k`
/// vertices are joined by a rainbow tree.
pub fn colour_join_rxk(k: usize, t: usize) -> Result<EdgeColouring> {
    certify_index(join_rxk_colouring(k, t)?, k, "path-cycle join")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, theta, wheel};

    #[test]
    fn k1_examples() {
        assert_eq!(colour_save_one_crx1(&complete(4).unwrap()).unwrap().r(), 5);
        assert_eq!(colour_save_one_crx1(&theta(&[2, 2, 1]).unwrap()).unwrap().r(), 4);
        assert_eq!(colour_save_one_crx1(&cycle(7).unwrap()), Err(Error::IsCycle));
    }

    #[test]
    fn k1_bowtie() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(colour_save_one_crx1(&g).unwrap().r(), 5);
    }

    #[test]
    fn k2_examples() {
        assert_eq!(colour_save_one_crx2(&complete(4).unwrap()).unwrap().r(), 5);
        assert_eq!(colour_save_one_crx2(&wheel(4).unwrap()).unwrap().r(), 7);
        assert_eq!(
            colour_save_one_crx2(&complete_bipartite(2, 3).unwrap()),
            Err(Error::MinimallyTwoConnected)
        );
    }

    #[test]
    fn joins() {
        assert_eq!(colour_join_rxk(2, 3).unwrap().r(), 3);
        assert_eq!(colour_join_rxk(3, 2).unwrap().r(), 8);
        assert!(colour_join_rxk(1, 5).is_err());
    }
}
