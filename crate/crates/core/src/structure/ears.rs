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

use crate::budget::Budget;
use crate::cycles::CycleQuery;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::connectivity::is_two_connected;

/// An initial cycle followed by ears, each given as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarDecomposition {
    pub initial_cycle: Vec<usize>,
    pub ears: Vec<Vec<usize>>,
}

impl EarDecomposition {
    /// Rebuilds the graph step by step, checking that every ear starts and
    /// ends in the graph built so far and is internally new. Returns the
    /// edge ids added at each step (cycle first).
    pub fn replay(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        let bad = |msg: String| Error::Inconsistent(msg);
        let mut in_h = vec![false; g.n()];
        let mut edge_in = vec![false; g.edge_count()];
        let cycle = g
            .cycle_edges(&self.initial_cycle)
            .ok_or_else(|| bad("initial cycle is not a cycle of the graph".into()))?;
        if self.initial_cycle.len() < 3 {
            return Err(bad("initial cycle shorter than 3".into()));
        }
        for &v in &self.initial_cycle {
            if in_h[v] {
                return Err(bad(format!("initial cycle repeats vertex {v}")));
            }
            in_h[v] = true;
        }
        for &e in &cycle {
            edge_in[e] = true;
        }
        let mut steps = vec![cycle];
        for ear in &self.ears {
            if ear.len() < 2 {
                return Err(bad("ear with fewer than two vertices".into()));
            }
            let (first, last) = (ear[0], ear[ear.len() - 1]);
            if !in_h[first] || !in_h[last] || first == last {
                return Err(bad(format!("ear {ear:?} has bad endpoints")));
            }
            for &v in &ear[1..ear.len() - 1] {
                if in_h[v] {
                    return Err(bad(format!("ear {ear:?} reuses vertex {v}")));
                }
                in_h[v] = true;
            }
            let edges = g
                .path_edges(ear)
                .ok_or_else(|| bad(format!("ear {ear:?} is not a path of the graph")))?;
            for &e in &edges {
                if edge_in[e] {
                    return Err(bad(format!("ear {ear:?} reuses edge {e}")));
                }
                edge_in[e] = true;
            }
            steps.push(edges);
        }
        if edge_in.iter().any(|&x| !x) {
            return Err(bad("replay does not cover every edge".into()));
        }
        Ok(steps)
    }
}

/// Ear decomposition of a 2-connected graph. The initial cycle is the
/// lexicographically least shortest cycle through vertex 0; each ear
/// starts at the lowest-id unused edge touching the current subgraph.
pub fn ear_decomposition(g: &Graph) -> Result<EarDecomposition> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let (initial_cycle, cycle_edges) = CycleQuery::new(g)
        .shortest(&[0], &mut Budget::unlimited())?
        .ok_or(Error::NotTwoConnected)?;
    let mut in_h = vec![false; g.n()];
    let mut edge_in = vec![false; g.edge_count()];
    for &v in &initial_cycle {
        in_h[v] = true;
    }
    for &e in &cycle_edges {
        edge_in[e] = true;
    }
    let mut ears = Vec::new();
    let mut remaining = g.edge_count() - cycle_edges.len();
    while remaining > 0 {
        let e = (0..g.edge_count())
            .find(|&e| {
                let (a, b) = g.edge(e);
                !edge_in[e] && (in_h[a] || in_h[b])
            })
            .expect("connected graph has an edge leaving the subgraph");
        let (a, b) = g.edge(e);
        let ear = if in_h[a] && in_h[b] {
            vec![a, b]
        } else {
            let (root, start) = if in_h[a] { (a, b) } else { (b, a) };
            let mut path = vec![root];
            path.extend(path_back_to(g, &in_h, root, start));
            path
        };
        for &v in &ear {
            in_h[v] = true;
        }
        for w in ear.windows(2) {
            let id = g.edge_id(w[0], w[1]).expect("ear edges exist");
            edge_in[id] = true;
            remaining -= 1;
        }
        ears.push(ear);
    }
    Ok(EarDecomposition { initial_cycle, ears })
}

/// BFS from `start` through vertices outside the subgraph to any subgraph
/// vertex other than `root`. Returns the path from `start` to that vertex.
fn path_back_to(g: &Graph, in_h: &[bool], root: usize, start: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.n()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(w, _) in g.neighbours(u) {
            if in_h[w] {
                if w != root {
                    let mut path = vec![w];
                    let mut x = u;
                    loop {
                        path.push(x);
                        if x == start {
                            break;
                        }
                        x = parent[x];
                    }
                    path.reverse();
                    return path;
                }
                continue;
            }
            if parent[w] == usize::MAX {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    unreachable!("2-connected graph always closes an ear")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_graph_has_one_ear() {
        // vertices 0 and 1 joined by three paths of length 2
        let g = Graph::new(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap();
        let d = ear_decomposition(&g).unwrap();
        assert_eq!(d.initial_cycle.len(), 4);
        assert_eq!(d.ears.len(), 1);
        assert_eq!(d.replay(&g).unwrap().len(), 2);
    }

    #[test]
    fn rejects_bridged_graph() {
        let g = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(ear_decomposition(&g), Err(Error::NotTwoConnected));
    }
}
