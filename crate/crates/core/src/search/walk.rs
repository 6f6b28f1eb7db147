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
use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::witness::WalkWitness;

const FAR: usize = usize::MAX / 4;

/// Distances from `source` where only non-anchor vertices may be passed
/// through; anchors are reached but not expanded.
fn anchor_distances(g: &Graph, source: usize, is_anchor: &[bool]) -> Vec<usize> {
    let mut dist = vec![FAR; g.n()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        if x != source && is_anchor[x] {
            continue;
        }
        for &(w, _) in g.neighbours(x) {
            if dist[w] == FAR {
                dist[w] = dist[x] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

struct WalkSearch<'a> {
    g: &'a Graph,
    colours: Option<(&'a [usize], usize)>,
    anchors: &'a [usize],
    is_anchor: Vec<bool>,
    /// `to_anchor[i][x]`: distance from `x` to `anchors[i]` through non-anchors.
    to_anchor: Vec<Vec<usize>>,
    /// Sum of the lower bounds of paths `i..`.
    tail_bound: Vec<usize>,
    blocked: Vec<bool>,
    colour_used: Vec<bool>,
    free_colours: usize,
    limit: usize,
    spent: usize,
    paths: Vec<Vec<usize>>,
}

impl WalkSearch<'_> {
    fn target(&self, i: usize) -> usize {
        (i + 1) % self.anchors.len()
    }

    fn colour_of(&self, e: usize) -> Option<usize> {
        self.colours.map(|(c, _)| c[e])
    }

    fn path(&mut self, i: usize, budget: &mut Budget) -> Result<bool> {
        if i == self.anchors.len() {
            return Ok(true);
        }
        let a = self.anchors[i];
        if a == self.anchors[self.target(i)] {
            self.paths.push(vec![a]);
            if self.path(i + 1, budget)? {
                return Ok(true);
            }
            self.paths.pop();
            return Ok(false);
        }
        self.paths.push(vec![a]);
        let found = self.extend(i, a, 0, budget)?;
        if !found {
            self.paths.pop();
        }
        Ok(found)
    }

    fn extend(&mut self, i: usize, x: usize, len: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let t = self.target(i);
        let b = self.anchors[t];
        let g = self.g;
        for &(w, e) in g.neighbours(x) {
            let col = self.colour_of(e);
            if col.is_some_and(|c| self.colour_used[c]) {
                continue;
            }
            let step = len + 1;
            if w == b {
                let total = self.spent + step + self.tail_bound[i + 1];
                if step < 2 || total > self.limit {
                    continue;
                }
                if self.colours.is_some() && self.free_colours <= self.tail_bound[i + 1] {
                    continue;
                }
                self.take(col);
                self.paths[i].push(w);
                self.spent += step;
                let found = self.path(i + 1, budget)?;
                if found {
                    return Ok(true);
                }
                self.spent -= step;
                self.paths[i].pop();
                self.release(col);
                continue;
            }
            if self.is_anchor[w] || self.blocked[w] {
                continue;
            }
            let rest = self.to_anchor[t][w] + self.tail_bound[i + 1];
            if self.spent + step + rest > self.limit {
                continue;
            }
            if self.colours.is_some() && self.free_colours < rest + 1 {
                continue;
            }
            self.take(col);
            self.blocked[w] = true;
            self.paths[i].push(w);
            if self.extend(i, w, step, budget)? {
                return Ok(true);
            }
            self.paths[i].pop();
            self.blocked[w] = false;
            self.release(col);
        }
        Ok(false)
    }

    fn take(&mut self, col: Option<usize>) {
        if let Some(c) = col {
            self.colour_used[c] = true;
            self.free_colours -= 1;
        }
    }

    fn release(&mut self, col: Option<usize>) {
        if let Some(c) = col {
            self.colour_used[c] = false;
            self.free_colours += 1;
        }
    }
}

/// Finds an S-subdivided closed walk through `anchors` in order: paths
/// `P_i` from `anchors[i]` to `anchors[i + 1]` (cyclically) whose internal
/// vertices are pairwise distinct and avoid every anchor, each nontrivial
/// path having length at least 2. With a colouring the union of the paths
/// must be rainbow. Walks are tried in order of total length, so the result
/// is a shortest one.
pub fn find_subdivided_closed_walk(
    g: &Graph,
    anchors: &[usize],
    colouring: Option<&EdgeColouring>,
    budget: &mut Budget,
) -> Result<WalkWitness> {
    let k = anchors.len();
    if k == 0 {
        return Err(Error::InvalidParameter("walk needs at least one anchor".into()));
    }
    if let Some(&v) = anchors.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidParameter(format!("anchor {v} out of range")));
    }
    if let Some(c) = colouring {
        if c.graph() != g {
            return Err(Error::InvalidColouring("colouring belongs to another graph".into()));
        }
    }
    let mut is_anchor = vec![false; g.n()];
    for &v in anchors {
        is_anchor[v] = true;
    }
    let to_anchor: Vec<Vec<usize>> = anchors.iter().map(|&a| anchor_distances(g, a, &is_anchor)).collect();
    let mut tail_bound = vec![0; k + 1];
    for i in (0..k).rev() {
        let (a, b) = (anchors[i], anchors[(i + 1) % k]);
        let lb = if a == b {
            0
        } else {
            let d = to_anchor[(i + 1) % k][a];
            if d >= FAR {
                return Err(Error::WalkNotFound);
            }
            d.max(2)
        };
        tail_bound[i] = tail_bound[i + 1] + lb;
    }
    let distinct = {
        let mut s = anchors.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len()
    };
    let nontrivial = (0..k).filter(|&i| anchors[i] != anchors[(i + 1) % k]).count();
    let max_total = g.n() - distinct + nontrivial;
    let r = colouring.map_or(0, |c| c.r());
    let mut search = WalkSearch {
        g,
        colours: colouring.map(|c| (c.colours(), c.r())),
        anchors,
        is_anchor,
        to_anchor,
        tail_bound,
        blocked: vec![false; g.n()],
        colour_used: vec![false; r],
        free_colours: r,
        limit: 0,
        spent: 0,
        paths: Vec::new(),
    };
    let start = search.tail_bound[0];
    let cap = colouring.map_or(max_total, |c| max_total.min(c.r()));
    for limit in start..=cap.max(start) {
        search.limit = limit;
        if search.path(0, budget)? {
            return Ok(WalkWitness {
                anchors: anchors.to_vec(),
                paths: search.paths,
            });
        }
    }
    Err(Error::WalkNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, hypercube};
    use std::sync::Arc;

    #[test]
    fn cycle_walk_in_order() {
        let g = cycle(6).unwrap();
        let w = find_subdivided_closed_walk(&g, &[0, 2, 4], None, &mut Budget::unlimited()).unwrap();
        w.validate(&g, None).unwrap();
        assert_eq!(w.paths, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]);
    }

    #[test]
    fn out_of_order_anchors_fail_on_a_cycle() {
        let g = cycle(6).unwrap();
        let r = find_subdivided_closed_walk(&g, &[0, 4, 2], None, &mut Budget::unlimited());
        assert!(r.is_ok());
        let r = find_subdivided_closed_walk(&g, &[0, 3, 1, 4], None, &mut Budget::unlimited());
        assert!(matches!(r, Err(Error::WalkNotFound)));
    }

    #[test]
    fn repeated_anchor_gives_trivial_path() {
        let g = hypercube(3).unwrap();
        let w = find_subdivided_closed_walk(&g, &[0, 0, 7], None, &mut Budget::unlimited()).unwrap();
        w.validate(&g, None).unwrap();
        assert_eq!(w.paths[0], vec![0]);
    }

    #[test]
    fn rainbow_walk_respects_colours() {
        let g = Arc::new(hypercube(3).unwrap());
        let c = EdgeColouring::rainbow(g.clone());
        let w = find_subdivided_closed_walk(&g, &[0, 7], Some(&c), &mut Budget::unlimited()).unwrap();
        w.validate(&g, Some(&c)).unwrap();
        assert_eq!(w.edges(&g).unwrap().len(), 6);
    }
}
