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

//! Simple undirected graphs with dense vertex ids and stable edge ids.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple, finite, undirected graph.
///
/// Vertices are `0..n`. Edges are stored as `(u, v)` with `u < v`, sorted
/// lexicographically; the position of an edge in that list is its edge id.
/// Two graphs built from the same edge set therefore number their edges
/// identically, which keeps colourings and certificates reproducible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbour, edge id), sorted by neighbour
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Endpoints are normalised and the edge
    /// list sorted; loops, duplicates and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Neighbours of `v` as `(neighbour, edge id)`, ascending by neighbour.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| self.adj[u][i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// The other endpoint of edge `id` seen from `v`.
    pub fn opposite(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Keeps the edges selected by `keep`. Returns the new graph and, for
    /// each new edge id, the id it had in `self`.
    pub fn edge_subgraph(&self, keep: impl Fn(usize) -> bool) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.edge_count()).filter(|&e| keep(e)).collect();
        // kept ids are ascending and the edge list is sorted, so the new ids
        // follow the same order
        let g = Graph::new(self.n, kept.iter().map(|&e| self.edges[e])).expect("subgraph of a valid graph is valid");
        (g, kept)
    }

    pub fn without_edge(&self, id: usize) -> Graph {
        self.edge_subgraph(|e| e != id).0
    }

    /// Deletes the vertices flagged in `removed` and relabels the rest in
    /// ascending order. Returns the new graph and the new-to-old vertex map.
    pub fn without_vertices(&self, removed: &[bool]) -> (Graph, Vec<usize>) {
        let mut new_id = vec![usize::MAX; self.n];
        let mut old_of = Vec::new();
        for v in 0..self.n {
            if !removed[v] {
                new_id[v] = old_of.len();
                old_of.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !removed[u] && !removed[v])
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let g = Graph::new(old_of.len(), edges).expect("induced subgraph is valid");
        (g, old_of)
    }

    pub fn without_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let mut removed = vec![false; self.n];
        removed[v] = true;
        self.without_vertices(&removed)
    }

    /// BFS distances from `source`; `usize::MAX` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_distances(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.distances_from(v)).collect()
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Connected in the usual sense; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().iter().all(|&c| c == 0)
    }

    /// Connectivity of the subgraph induced by vertices not in `removed`.
    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let alive = removed.iter().filter(|&&r| !r).count();
        reached == alive
    }

    /// Edge ids of the closed walk through `vertices` (consecutive pairs,
    /// including last-to-first), or `None` if some pair is not adjacent.
    pub fn cycle_edges(&self, vertices: &[usize]) -> Option<Vec<usize>> {
        let k = vertices.len();
        (0..k)
            .map(|i| self.edge_id(vertices[i], vertices[(i + 1) % k]))
            .collect()
    }

    /// Edge ids along an open path.
    pub fn path_edges(&self, vertices: &[usize]) -> Option<Vec<usize>> {
        vertices.windows(2).map(|w| self.edge_id(w[0], w[1])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_canonical() {
        let g = Graph::new(4, [(3, 2), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(2, 0), Some(1));
        assert_eq!(g.edge_id(1, 3), None);
        assert_eq!(g.neighbours(2), &[(0, 1), (3, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn vertex_deletion_relabels() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (h, map) = g.without_vertex(1);
        assert_eq!(map, vec![0, 2, 3]);
        assert_eq!(h.edges(), &[(0, 2), (1, 2)]);
        assert!(h.is_connected());
    }

    #[test]
    fn connectivity_with_removed_set() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(g.is_connected());
        assert!(!g.is_connected_without(&[false, true, false, false]));
        assert!(g.is_connected_without(&[true, false, false, false]));
    }
}
