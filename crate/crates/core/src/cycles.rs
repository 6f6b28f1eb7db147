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

//! Backtracking search over simple cycles through a prescribed vertex set.
//!
//! The search grows a simple path from an anchor vertex (the lowest target),
//! exploring neighbours in ascending id order, and closes it when every
//! target has been visited. Each cycle is reported once, in the direction
//! whose second vertex is smaller than its last. Optional constraints:
//! an edge colouring (only rainbow cycles), a vertex mask, a length cap, and
//! a distance table for branch-and-bound on length.

use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy)]
pub(crate) struct CycleQuery<'a> {
    pub graph: &'a Graph,
    /// Colour per edge id and the number of colours.
    pub colours: Option<(&'a [usize], usize)>,
    pub allowed: Option<&'a [bool]>,
    pub max_len: usize,
    pub distances: Option<&'a [Vec<usize>]>,
}

impl<'a> CycleQuery<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        CycleQuery {
            graph,
            colours: None,
            allowed: None,
            max_len: graph.n(),
            distances: None,
        }
    }

    pub fn coloured(mut self, colours: &'a [usize], r: usize) -> Self {
        self.colours = Some((colours, r));
        self
    }

    pub fn within(mut self, allowed: &'a [bool]) -> Self {
        self.allowed = Some(allowed);
        self
    }

    pub fn with_distances(mut self, distances: &'a [Vec<usize>]) -> Self {
        self.distances = Some(distances);
        self
    }

    /// Calls `visit(vertices, edges)` for every qualifying cycle through
    /// `targets` until it breaks. `targets` must be non-empty, in range and
    /// duplicate-free.
    pub fn for_each<F>(&self, targets: &[usize], budget: &mut Budget, visit: F) -> Result<ControlFlow<()>>
    where
        F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
    {
        let mut dfs = Dfs::new(*self, targets, budget, false, visit);
        dfs.run()
    }

    /// First qualifying cycle as `(vertices, edges)`.
    pub fn find(&self, targets: &[usize], budget: &mut Budget) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let mut found = None;
        let _ = self.for_each(targets, budget, |vs, es| {
            found = Some((vs.to_vec(), es.to_vec()));
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// Shortest qualifying cycle through `targets` (first found at the
    /// minimum length in search order).
    pub fn shortest(&self, targets: &[usize], budget: &mut Budget) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let dfs_visit = |vs: &[usize], es: &[usize]| {
            best = Some((vs.to_vec(), es.to_vec()));
            ControlFlow::Continue(())
        };
        {
            let mut dfs = Dfs::new(*self, targets, budget, true, dfs_visit);
            let _ = dfs.run()?;
        }
        Ok(best)
    }
}

struct Dfs<'a, 'b, F> {
    g: &'a Graph,
    colours: Option<&'a [usize]>,
    used: Vec<bool>,
    free: usize,
    allowed: Option<&'a [bool]>,
    distances: Option<&'a [Vec<usize>]>,
    targets: &'b [usize],
    is_target: Vec<bool>,
    left: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    path_edges: Vec<usize>,
    anchor: usize,
    max_len: usize,
    shrink: bool,
    budget: &'b mut Budget,
    mark: Vec<u32>,
    stamp: u32,
    queue: Vec<usize>,
    visit: F,
}

impl<'a, 'b, F> Dfs<'a, 'b, F>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    fn new(q: CycleQuery<'a>, targets: &'b [usize], budget: &'b mut Budget, shrink: bool, visit: F) -> Self {
        let n = q.graph.n();
        let mut is_target = vec![false; n];
        for &t in targets {
            is_target[t] = true;
        }
        let anchor = targets.iter().copied().min().expect("non-empty target set");
        let (colours, r) = match q.colours {
            Some((c, r)) => (Some(c), r),
            None => (None, 0),
        };
        Dfs {
            g: q.graph,
            colours,
            used: vec![false; r],
            free: r,
            allowed: q.allowed,
            distances: q.distances,
            targets,
            is_target,
            left: targets.len(),
            on_path: vec![false; n],
            path: Vec::with_capacity(n),
            path_edges: Vec::with_capacity(n),
            anchor,
            max_len: q.max_len,
            shrink,
            budget,
            mark: vec![0; n],
            stamp: 0,
            queue: Vec::with_capacity(n),
            visit,
        }
    }

    fn run(&mut self) -> Result<ControlFlow<()>> {
        if let Some(a) = self.allowed {
            if self.targets.iter().any(|&t| !a[t]) {
                return Ok(ControlFlow::Continue(()));
            }
        }
        self.path.push(self.anchor);
        self.on_path[self.anchor] = true;
        self.left -= 1;
        self.extend(self.anchor)
    }

    fn extend(&mut self, v: usize) -> Result<ControlFlow<()>> {
        self.budget.tick()?;
        if !self.promising(v) {
            return Ok(ControlFlow::Continue(()));
        }
        let g = self.g;
        for &(w, e) in g.neighbours(v) {
            if let Some(a) = self.allowed {
                if !a[w] {
                    continue;
                }
            }
            let colour = self.colours.map(|c| c[e]);
            if let Some(c) = colour {
                if self.used[c] {
                    continue;
                }
            }
            let len_after = self.path_edges.len() + 1;
            if w == self.anchor {
                if len_after >= 3 && self.left == 0 && self.path[1] < v && len_after <= self.max_len {
                    self.path_edges.push(e);
                    let flow = (self.visit)(&self.path, &self.path_edges);
                    self.path_edges.pop();
                    if self.shrink {
                        self.max_len = len_after - 1;
                    }
                    if flow.is_break() {
                        return Ok(flow);
                    }
                }
                continue;
            }
            if self.on_path[w] || len_after + 1 > self.max_len {
                continue;
            }
            self.path.push(w);
            self.path_edges.push(e);
            self.on_path[w] = true;
            if self.is_target[w] {
                self.left -= 1;
            }
            if let Some(c) = colour {
                self.used[c] = true;
                self.free -= 1;
            }
            let flow = self.extend(w);
            if let Some(c) = colour {
                self.used[c] = false;
                self.free += 1;
            }
            if self.is_target[w] {
                self.left += 1;
            }
            self.on_path[w] = false;
            self.path_edges.pop();
            self.path.pop();
            let flow = flow?;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn promising(&mut self, v: usize) -> bool {
        let len = self.path_edges.len();
        // each remaining target costs at least one edge, plus the closing edge
        let need = self.left + 1;
        if len + need > self.max_len {
            return false;
        }
        if self.colours.is_some() && self.free < need {
            return false;
        }
        if let Some(d) = self.distances {
            let lb = if self.left == 0 {
                d[v][self.anchor]
            } else {
                self.targets
                    .iter()
                    .filter(|&&t| !self.on_path[t])
                    .map(|&t| d[v][t].saturating_add(d[t][self.anchor]))
                    .max()
                    .unwrap_or(0)
            };
            if len.saturating_add(lb) > self.max_len {
                return false;
            }
        }
        if self.left > 0 {
            return self.reachable(v);
        }
        true
    }

    /// Every unvisited target, and some neighbour of the anchor, must be
    /// reachable from `v` through off-path vertices along usable edges.
    fn reachable(&mut self, v: usize) -> bool {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            self.stamp = 1;
        }
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push(v);
        self.mark[v] = stamp;
        let mut head = 0;
        let mut found_targets = 0;
        let mut touches_anchor = false;
        let g = self.g;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            for &(w, e) in g.neighbours(u) {
                if let Some(c) = self.colours {
                    if self.used[c[e]] {
                        continue;
                    }
                }
                if w == self.anchor {
                    if u != v {
                        touches_anchor = true;
                    }
                    continue;
                }
                if self.on_path[w] || self.mark[w] == stamp {
                    continue;
                }
                if let Some(a) = self.allowed {
                    if !a[w] {
                        continue;
                    }
                }
                self.mark[w] = stamp;
                if self.is_target[w] {
                    found_targets += 1;
                }
                self.queue.push(w);
            }
        }
        found_targets == self.left && touches_anchor
    }
}

/// Normalises a vertex set: sorted, deduplicated, range-checked.
pub(crate) fn normalise_set(g: &Graph, set: &[usize]) -> Result<Vec<usize>> {
    use crate::error::Error;
    if set.is_empty() {
        return Err(Error::InvalidParameter("vertex set must be non-empty".into()));
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidParameter(format!(
            "vertex {bad} out of range 0..{}",
            g.n()
        )));
    }
    Ok(s)
}

/// Visits every simple cycle of `g` exactly once (as a vertex sequence
/// starting at its minimum vertex, with the edge sequence).
pub(crate) fn for_each_cycle<F>(g: &Graph, budget: &mut Budget, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize], &[usize]) -> ControlFlow<()>,
{
    let mut allowed = vec![true; g.n()];
    for a in 0..g.n() {
        let q = CycleQuery::new(g).within(&allowed);
        if q.for_each(&[a], budget, &mut visit)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
        allowed[a] = false;
    }
    Ok(ControlFlow::Continue(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn counts_every_cycle_once() {
        // K_4 has 4 triangles and 3 four-cycles
        let mut count = 0;
        let _ = for_each_cycle(&k4(), &mut Budget::unlimited(), |_, _| {
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(count, 7);
    }

    #[test]
    fn finds_cycle_through_targets() {
        let g = cycle(6);
        let (vs, es) = CycleQuery::new(&g)
            .find(&[1, 4], &mut Budget::unlimited())
            .unwrap()
            .unwrap();
        assert_eq!(vs.len(), 6);
        assert_eq!(es.len(), 6);
    }

    #[test]
    fn rainbow_constraint_blocks_repeats() {
        let g = cycle(4);
        let colours = [0, 1, 0, 1];
        let none = CycleQuery::new(&g)
            .coloured(&colours, 2)
            .find(&[0], &mut Budget::unlimited())
            .unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn shortest_uses_bound() {
        let g = k4();
        let (vs, _) = CycleQuery::new(&g)
            .shortest(&[0, 3], &mut Budget::unlimited())
            .unwrap()
            .unwrap();
        assert_eq!(vs.len(), 3);
    }

    #[test]
    fn budget_is_enforced() {
        let g = k4();
        let mut b = Budget::new(1);
        let r = CycleQuery::new(&g).find(&[0, 1, 2, 3], &mut b);
        assert!(r.is_err());
    }
}
