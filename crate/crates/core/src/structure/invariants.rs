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

use thiserror::Error;

use crate::budget::Budget;
use crate::cycles::CycleQuery;
use crate::error::{Error as CrateError, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphInvariants {
    /// Shortest cycle length; `None` for forests.
    pub girth: Option<usize>,
    /// Longest cycle length; 0 for forests.
    pub circumference: usize,
    pub is_hamiltonian: bool,
}

/// Whatever was established before the budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PartialInvariants {
    pub girth: Option<usize>,
    pub circumference_at_least: usize,
    pub is_hamiltonian: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {limit} nodes exceeded while computing invariants")]
pub struct InvariantsBudgetExceeded {
    pub limit: u64,
    pub partial: PartialInvariants,
}

impl From<InvariantsBudgetExceeded> for CrateError {
    fn from(e: InvariantsBudgetExceeded) -> Self {
        CrateError::BudgetExceeded { limit: e.limit }
    }
}

pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &(w, e) in g.neighbours(u) {
                if e == parent_edge[u] && u != root {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// A Hamilton cycle as a vertex sequence, if one exists.
pub fn hamilton_cycle(g: &Graph, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    if g.n() < 3 {
        return Ok(None);
    }
    let all: Vec<usize> = (0..g.n()).collect();
    Ok(CycleQuery::new(g).find(&all, budget)?.map(|(vs, _)| vs))
}

pub fn is_hamiltonian(g: &Graph, budget: &mut Budget) -> Result<bool> {
    Ok(hamilton_cycle(g, budget)?.is_some())
}

/// Not Hamiltonian, but every vertex-deleted subgraph is.
pub fn is_hypohamiltonian(g: &Graph, budget: &mut Budget) -> Result<bool> {
    if g.n() < 3 {
        return Err(CrateError::InvalidParameter(
            "hypohamiltonicity needs at least 3 vertices".into(),
        ));
    }
    if is_hamiltonian(g, budget)? {
        return Ok(false);
    }
    for v in 0..g.n() {
        let (h, _) = g.without_vertex(v);
        if !is_hamiltonian(&h, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Longest cycle length, 0 if the graph is a forest.
pub fn circumference(g: &Graph, budget: &mut Budget) -> Result<usize> {
    let mut best = 0;
    longest_cycle(g, budget, &mut best)?;
    Ok(best)
}

fn longest_cycle(g: &Graph, budget: &mut Budget, best: &mut usize) -> Result<()> {
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut mark = vec![0u32; n];
    let mut stamp = 0u32;
    let mut stack = Vec::new();
    for s in 0..n {
        if n - s <= *best {
            break;
        }
        let allowed = |v: usize| v >= s;
        on_path[s] = true;
        let mut search = LongestDfs {
            g,
            s,
            allowed: &allowed,
            on_path: &mut on_path,
            mark: &mut mark,
            stamp: &mut stamp,
            stack: &mut stack,
            best,
            budget,
        };
        let r = search.extend(s, 0);
        on_path[s] = false;
        r?;
    }
    Ok(())
}

struct LongestDfs<'a, A: Fn(usize) -> bool> {
    g: &'a Graph,
    s: usize,
    allowed: &'a A,
    on_path: &'a mut Vec<bool>,
    mark: &'a mut Vec<u32>,
    stamp: &'a mut u32,
    stack: &'a mut Vec<usize>,
    best: &'a mut usize,
    budget: &'a mut Budget,
}

impl<A: Fn(usize) -> bool> LongestDfs<'_, A> {
    fn extend(&mut self, v: usize, len: usize) -> Result<()> {
        self.budget.tick()?;
        if len + 1 + self.reachable_from(v) <= *self.best {
            return Ok(());
        }
        let g = self.g;
        for &(w, _) in g.neighbours(v) {
            if w == self.s {
                if len + 1 >= 3 {
                    *self.best = (*self.best).max(len + 1);
                }
                continue;
            }
            if !(self.allowed)(w) || self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            let r = self.extend(w, len + 1);
            self.on_path[w] = false;
            r?;
        }
        Ok(())
    }

    /// Off-path allowed vertices reachable from `v`.
    fn reachable_from(&mut self, v: usize) -> usize {
        *self.stamp = self.stamp.wrapping_add(1);
        if *self.stamp == 0 {
            self.mark.iter_mut().for_each(|m| *m = 0);
            *self.stamp = 1;
        }
        let stamp = *self.stamp;
        self.stack.clear();
        self.stack.push(v);
        self.mark[v] = stamp;
        let mut count = 0;
        while let Some(u) = self.stack.pop() {
            for &(w, _) in self.g.neighbours(u) {
                if self.mark[w] != stamp && !self.on_path[w] && (self.allowed)(w) {
                    self.mark[w] = stamp;
                    count += 1;
                    self.stack.push(w);
                }
            }
        }
        count
    }
}

/// Girth, circumference and Hamiltonicity by exhaustive search.
pub fn graph_invariants(
    g: &Graph,
    budget: &mut Budget,
) -> std::result::Result<GraphInvariants, InvariantsBudgetExceeded> {
    let mut partial = PartialInvariants {
        girth: girth(g),
        ..PartialInvariants::default()
    };
    let fail = |partial: PartialInvariants, budget: &Budget| InvariantsBudgetExceeded {
        limit: budget.limit(),
        partial,
    };
    if partial.girth.is_none() {
        return Ok(GraphInvariants {
            girth: None,
            circumference: 0,
            is_hamiltonian: false,
        });
    }
    let ham = is_hamiltonian(g, budget).map_err(|_| fail(partial, budget))?;
    partial.is_hamiltonian = Some(ham);
    let circ = if ham {
        g.n()
    } else {
        let mut best = partial.girth.unwrap_or(0);
        if longest_cycle(g, budget, &mut best).is_err() {
            partial.circumference_at_least = best;
            return Err(fail(partial, budget));
        }
        best
    };
    Ok(GraphInvariants {
        girth: partial.girth,
        circumference: circ,
        is_hamiltonian: ham,
    })
}
