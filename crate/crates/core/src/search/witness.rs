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

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn bad(msg: String) -> Error {
    Error::Inconsistent(msg)
}

fn check_rainbow(c: &EdgeColouring, edges: &[usize], what: &str) -> Result<()> {
    if c.is_rainbow_edges(edges) {
        Ok(())
    } else {
        Err(bad(format!("{what} repeats a colour")))
    }
}

/// A cycle as a closed vertex sequence with the matching edge ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Checks adjacency, distinctness and (if given) colour distinctness.
    pub fn validate(&self, g: &Graph, colouring: Option<&EdgeColouring>) -> Result<()> {
        let k = self.vertices.len();
        if k < 3 || self.edges.len() != k {
            return Err(bad("cycle witness has the wrong shape".into()));
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(bad(format!("cycle witness repeats or misplaces vertex {v}")));
            }
        }
        if g.cycle_edges(&self.vertices).as_deref() != Some(&self.edges[..]) {
            return Err(bad("cycle witness edges do not match its vertices".into()));
        }
        if let Some(c) = colouring {
            check_rainbow(c, &self.edges, "cycle witness")?;
        }
        Ok(())
    }
}

/// A tree given by its edges, with its vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeWitness {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl TreeWitness {
    pub fn validate(&self, g: &Graph, colouring: Option<&EdgeColouring>, spans: &[usize]) -> Result<()> {
        let mut in_tree = vec![false; g.n()];
        for &v in &self.vertices {
            if v >= g.n() || std::mem::replace(&mut in_tree[v], true) {
                return Err(bad(format!("tree witness repeats or misplaces vertex {v}")));
            }
        }
        if self.edges.len() + 1 != self.vertices.len() {
            return Err(bad("tree witness edge count is not vertices - 1".into()));
        }
        // union-find over the tree's vertices: n-1 edges without a cycle is a tree
        let mut parent: Vec<usize> = (0..g.n()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &e in &self.edges {
            if e >= g.edge_count() {
                return Err(bad(format!("tree witness edge {e} out of range")));
            }
            let (a, b) = g.edge(e);
            if !in_tree[a] || !in_tree[b] {
                return Err(bad(format!("tree witness edge {e} leaves its vertex set")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(bad("tree witness contains a cycle".into()));
            }
            parent[ra] = rb;
        }
        if let Some(&v) = spans.iter().find(|&&v| v >= g.n() || !in_tree[v]) {
            return Err(bad(format!("tree witness misses vertex {v}")));
        }
        if let Some(c) = colouring {
            check_rainbow(c, &self.edges, "tree witness")?;
        }
        Ok(())
    }
}

/// An S-subdivided closed walk: `paths[i]` runs from `anchors[i]` to
/// `anchors[i + 1]` (cyclically); a trivial path is the single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkWitness {
    pub anchors: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl WalkWitness {
    /// Edge ids of all paths, in walk order.
    pub fn edges(&self, g: &Graph) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for p in &self.paths {
            out.extend(
                g.path_edges(p)
                    .ok_or_else(|| bad(format!("walk path {p:?} is not a path of the graph")))?,
            );
        }
        Ok(out)
    }

    pub fn validate(&self, g: &Graph, colouring: Option<&EdgeColouring>) -> Result<()> {
        let k = self.anchors.len();
        if k == 0 || self.paths.len() != k {
            return Err(bad("walk witness has the wrong shape".into()));
        }
        let mut is_anchor = vec![false; g.n()];
        for &v in &self.anchors {
            if v >= g.n() {
                return Err(bad(format!("walk anchor {v} out of range")));
            }
            is_anchor[v] = true;
        }
        let mut used = vec![false; g.n()];
        for (i, p) in self.paths.iter().enumerate() {
            let (a, b) = (self.anchors[i], self.anchors[(i + 1) % k]);
            if p.first() != Some(&a) || p.last() != Some(&b) {
                return Err(bad(format!("walk path {i} does not join its anchors")));
            }
            if a == b {
                if p.len() != 1 {
                    return Err(bad(format!("walk path {i} should be trivial")));
                }
                continue;
            }
            if p.len() < 3 {
                return Err(bad(format!("walk path {i} is shorter than 2")));
            }
            for &v in &p[1..p.len() - 1] {
                if is_anchor[v] || std::mem::replace(&mut used[v], true) {
                    return Err(bad(format!("walk reuses internal vertex {v}")));
                }
            }
        }
        let edges = self.edges(g)?;
        if let Some(c) = colouring {
            check_rainbow(c, &edges, "walk witness")?;
        }
        Ok(())
    }
}
