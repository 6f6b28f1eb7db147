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

//! Canonical enumeration of r-colourings with pruning on dead cycles.
//!
//! Every cycle of length at most `r` is a candidate rainbow cycle. Colouring
//! edges in id order, a cycle dies as soon as two of its coloured edges
//! share a colour; a k-set whose candidate cycles have all died cannot be
//! rescued by any completion, so the branch is cut.

use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::cycles::for_each_cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{colex_rank, Combinations};

/// All cycles of a graph with the k-sets each one covers.
pub(crate) struct CycleIndex {
    edge_count: usize,
    /// Edge ids and colex ranks of covered k-sets, per cycle.
    cycles: Vec<(Vec<usize>, Vec<usize>)>,
    set_count: usize,
}

impl CycleIndex {
    pub fn build(g: &Graph, k: usize, budget: &mut Budget) -> Result<Self> {
        let set_count = usize::try_from(crate::subsets::binomial(g.n(), k))
            .map_err(|_| Error::OutOfScope("too many vertex sets".into()))?;
        let mut cycles = Vec::new();
        let mut failure = None;
        let flow = for_each_cycle(g, budget, |vertices, edges| {
            let mut vs = vertices.to_vec();
            vs.sort_unstable();
            let sets: Vec<usize> = Combinations::new(vs.len(), k)
                .map(|idx| {
                    let s: Vec<usize> = idx.iter().map(|&i| vs[i]).collect();
                    colex_rank(&s) as usize
                })
                .collect();
            cycles.push((edges.to_vec(), sets));
            if cycles.len() > 5_000_000 {
                failure = Some(Error::OutOfScope("more than 5,000,000 cycles".into()));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        if let (ControlFlow::Break(()), Some(e)) = (flow, failure) {
            return Err(e);
        }
        Ok(CycleIndex {
            edge_count: g.edge_count(),
            cycles,
            set_count,
        })
    }

    /// Searches canonical colourings with exactly `r` colours in
    /// lexicographic order. Returns the first whose every k-set keeps a
    /// rainbow cycle.
    pub fn search(&self, r: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
        let e = self.edge_count;
        if r == 0 || r > e || r > 64 {
            return Ok(None);
        }
        let live: Vec<usize> = (0..self.cycles.len())
            .filter(|&c| self.cycles[c].0.len() <= r)
            .collect();
        let mut alive = vec![0usize; self.set_count];
        let mut edge_cycles = vec![Vec::new(); e];
        for (slot, &c) in live.iter().enumerate() {
            for &s in &self.cycles[c].1 {
                alive[s] += 1;
            }
            for &x in &self.cycles[c].0 {
                edge_cycles[x].push(slot);
            }
        }
        if alive.contains(&0) {
            return Ok(None);
        }
        let mut state = State {
            index: self,
            live,
            edge_cycles,
            mask: vec![0; 0],
            dead: Vec::new(),
            alive,
            colours: vec![0; e],
            r,
        };
        state.mask = vec![0; state.live.len()];
        state.dead = vec![false; state.live.len()];
        if state.dfs(0, 0, budget)? {
            Ok(Some(state.colours))
        } else {
            Ok(None)
        }
    }
}

struct State<'a> {
    index: &'a CycleIndex,
    live: Vec<usize>,
    edge_cycles: Vec<Vec<usize>>,
    mask: Vec<u64>,
    dead: Vec<bool>,
    alive: Vec<usize>,
    colours: Vec<usize>,
    r: usize,
}

impl State<'_> {
    /// Colours edge `i` with `c`; returns the cycles whose mask gained a bit,
    /// the cycles killed, and whether some k-set lost its last cycle.
    fn assign(&mut self, i: usize, c: usize) -> (Vec<usize>, Vec<usize>, bool) {
        let bit = 1u64 << c;
        let mut marked = Vec::new();
        let mut killed = Vec::new();
        let mut stuck = false;
        for idx in 0..self.edge_cycles[i].len() {
            let slot = self.edge_cycles[i][idx];
            if self.dead[slot] {
                continue;
            }
            if self.mask[slot] & bit != 0 {
                self.dead[slot] = true;
                killed.push(slot);
                for &s in &self.index.cycles[self.live[slot]].1 {
                    self.alive[s] -= 1;
                    stuck |= self.alive[s] == 0;
                }
            } else {
                self.mask[slot] |= bit;
                marked.push(slot);
            }
        }
        (marked, killed, stuck)
    }

    fn unassign(&mut self, c: usize, marked: Vec<usize>, killed: Vec<usize>) {
        let bit = 1u64 << c;
        for slot in marked {
            self.mask[slot] &= !bit;
        }
        for slot in killed {
            self.dead[slot] = false;
            for &s in &self.index.cycles[self.live[slot]].1 {
                self.alive[s] += 1;
            }
        }
    }

    fn dfs(&mut self, i: usize, used: usize, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        let e = self.colours.len();
        if i == e {
            return Ok(used == self.r);
        }
        let lowest = if self.r - used == e - i { used } else { 0 };
        for c in lowest..=used.min(self.r - 1) {
            self.colours[i] = c;
            let (marked, killed, stuck) = self.assign(i, c);
            let found = !stuck && self.dfs(i + 1, used.max(c + 1), budget)?;
            self.unassign(c, marked, killed);
            if found {
                self.colours[i] = c;
                return Ok(true);
            }
        }
        Ok(false)
    }
}
