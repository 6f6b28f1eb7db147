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

use crate::budget::Budget;
use crate::colouring::EdgeColouring;
use crate::cycles::normalise_set;
use crate::error::Result;

use super::witness::TreeWitness;

struct TreeSearch<'a> {
    c: &'a EdgeColouring,
    is_target: Vec<bool>,
    in_tree: Vec<bool>,
    excluded: Vec<bool>,
    colour_used: Vec<bool>,
    free_colours: usize,
    uncovered: usize,
    edges: Vec<usize>,
    order: Vec<usize>,
    seen: Vec<bool>,
    stack: Vec<usize>,
}

impl TreeSearch<'_> {
    fn usable(&self, e: usize) -> bool {
        !self.excluded[e] && !self.colour_used[self.c.colour(e)]
    }

    fn lowest_frontier_edge(&self) -> Option<usize> {
        let g = self.c.graph();
        (0..g.edge_count()).find(|&e| {
            let (a, b) = g.edge(e);
            self.in_tree[a] != self.in_tree[b] && self.usable(e)
        })
    }

    /// Every uncovered target is reachable from the tree through usable
    /// edges and non-tree vertices.
    fn targets_reachable(&mut self) -> bool {
        let g = self.c.graph();
        self.seen.iter_mut().for_each(|s| *s = false);
        self.stack.clear();
        for &v in &self.order {
            self.seen[v] = true;
            self.stack.push(v);
        }
        let mut found = 0;
        while let Some(x) = self.stack.pop() {
            for &(w, e) in g.neighbours(x) {
                if self.seen[w] || !self.usable(e) {
                    continue;
                }
                self.seen[w] = true;
                if self.is_target[w] {
                    found += 1;
                }
                self.stack.push(w);
            }
        }
        found == self.uncovered
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if self.uncovered == 0 {
            return Ok(true);
        }
        if self.free_colours < self.uncovered || !self.targets_reachable() {
            return Ok(false);
        }
        let Some(e) = self.lowest_frontier_edge() else {
            return Ok(false);
        };
        let (a, b) = self.c.graph().edge(e);
        let w = if self.in_tree[a] { b } else { a };
        let col = self.c.colour(e);

        self.in_tree[w] = true;
        self.colour_used[col] = true;
        self.free_colours -= 1;
        self.edges.push(e);
        self.order.push(w);
        if self.is_target[w] {
            self.uncovered -= 1;
        }
        if self.run(budget)? {
            return Ok(true);
        }
        if self.is_target[w] {
            self.uncovered += 1;
        }
        self.order.pop();
        self.edges.pop();
        self.free_colours += 1;
        self.colour_used[col] = false;
        self.in_tree[w] = false;

        self.excluded[e] = true;
        let found = self.run(budget)?;
        self.excluded[e] = false;
        Ok(found)
    }
}

/// A rainbow tree containing every vertex of `set`, if one exists. The
/// search grows a tree from the lowest vertex of the set, branching on the
/// lowest-id usable edge that leaves it.
pub fn rainbow_tree_through(c: &EdgeColouring, set: &[usize], budget: &mut Budget) -> Result<Option<TreeWitness>> {
    let g = c.graph();
    let s = normalise_set(g, set)?;
    let n = g.n();
    let mut is_target = vec![false; n];
    for &v in &s {
        is_target[v] = true;
    }
    let root = s[0];
    let mut in_tree = vec![false; n];
    in_tree[root] = true;
    let mut search = TreeSearch {
        c,
        is_target,
        in_tree,
        excluded: vec![false; g.edge_count()],
        colour_used: vec![false; c.r()],
        free_colours: c.r(),
        uncovered: s.len() - 1,
        edges: Vec::new(),
        order: vec![root],
        seen: vec![false; n],
        stack: Vec::new(),
    };
    if !search.run(budget)? {
        return Ok(None);
    }
    let mut vertices = search.order;
    vertices.sort_unstable();
    Ok(Some(TreeWitness {
        edges: search.edges,
        vertices,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{path, wheel};
    use std::sync::Arc;

    #[test]
    fn path_endpoints_need_distinct_colours() {
        let g = Arc::new(path(4).unwrap());
        let good = EdgeColouring::new(g.clone(), vec![0, 1, 2], 3).unwrap();
        let w = rainbow_tree_through(&good, &[0, 3], &mut Budget::unlimited())
            .unwrap()
            .unwrap();
        w.validate(&g, Some(&good), &[0, 3]).unwrap();
        let bad = EdgeColouring::new(g, vec![0, 1, 0], 2).unwrap();
        assert!(rainbow_tree_through(&bad, &[0, 3], &mut Budget::unlimited())
            .unwrap()
            .is_none());
    }

    #[test]
    fn single_vertex_is_a_tree() {
        let g = Arc::new(wheel(4).unwrap());
        let c = EdgeColouring::new(g.clone(), vec![0; g.edge_count()], 1).unwrap();
        let w = rainbow_tree_through(&c, &[2], &mut Budget::unlimited())
            .unwrap()
            .unwrap();
        assert!(w.edges.is_empty());
    }

    #[test]
    fn star_through_hub() {
        // one colour per spoke lets the hub join all three rim vertices
        let g = Arc::new(wheel(3).unwrap());
        let colours: Vec<usize> = g.edges().iter().map(|&(a, b)| if b == 3 { a } else { 0 }).collect();
        let c = EdgeColouring::new(g.clone(), colours, 3).unwrap();
        let w = rainbow_tree_through(&c, &[0, 1, 2], &mut Budget::unlimited())
            .unwrap()
            .unwrap();
        w.validate(&g, Some(&c), &[0, 1, 2]).unwrap();
    }
}
