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

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::constructions::every_cycle_through_uses;
use crate::error::{Error, Result};
use crate::generators::complete_bipartite;
use crate::graph::Graph;
use crate::search::min_cycle_length_through;
use crate::subsets::binomial;

use super::index::CycleIndex;
use super::tree_search;

/// What an exhaustion certificate ruled out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    /// k-rainbow cycle colourings.
    Cycles,
    /// k-rainbow index colourings (rainbow trees).
    Trees,
}

/// Counting rules on complete bipartite graphs `K_{m,n}` (small class first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum CollisionRule {
    /// `K_{k,n}`: with fewer than `ceil(n / (k-1))` colours some small-class
    /// vertex sends one colour to `k` vertices, and every cycle through
    /// those `k` vertices passes through that small-class vertex twice.
    Star { k: usize, n: usize },
    /// `K_{3,n}`, `k = 2`: with `r` colours and `C(r, 3) < n`, two
    /// large-class vertices see at most three colours between them.
    ColourSets { n: usize },
    /// `K_{m,n}` with `m >= 2k` and `n > (k-1)(4k-1)^m`: under `4k - 1`
    /// colours, `k` large-class vertices share a colour vector and any
    /// cycle through them has length at least `4k`.
    Vectors { m: usize, n: usize, k: usize },
}

impl CollisionRule {
    /// Graph shape `(m, n)` the rule applies to.
    fn shape(&self) -> (usize, usize) {
        match *self {
            CollisionRule::Star { k, n } => (k, n),
            CollisionRule::ColourSets { n } => (3, n),
            CollisionRule::Vectors { m, n, .. } => (m, n),
        }
    }

    fn k(&self) -> usize {
        match *self {
            CollisionRule::Star { k, .. } | CollisionRule::Vectors { k, .. } => k,
            CollisionRule::ColourSets { .. } => 2,
        }
    }

    /// The lower bound, or `None` when the rule's hypothesis fails.
    pub fn bound(&self) -> Option<usize> {
        match *self {
            CollisionRule::Star { k, n } => (k >= 2 && n >= k).then(|| n.div_ceil(k - 1)),
            CollisionRule::ColourSets { n } => {
                (n >= 3).then(|| (3..).take_while(|&r| binomial(r, 3) < n as u128).last().unwrap_or(2) + 1)
            }
            CollisionRule::Vectors { m, n, k } => {
                let threshold = (4 * k as u128 - 1)
                    .checked_pow(m as u32)
                    .and_then(|p| p.checked_mul(k as u128 - 1));
                (k >= 1 && m >= 2 * k && threshold.is_some_and(|t| (n as u128) > t)).then_some(4 * k)
            }
        }
    }
}

/// `k` vertices such that every cycle through them uses both given edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForcedPair {
    pub edges: (usize, usize),
    pub set: Vec<usize>,
}

/// Independently checkable evidence for a lower bound on the number of
/// colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Every cycle through `set` has at least `length` edges.
    DistanceBound {
        set: Vec<usize>,
        length: usize,
    },
    ColourCollision {
        rule: CollisionRule,
        bound: usize,
    },
    /// One entry per pair of edges: a k-set on no cycle avoiding either
    /// edge. Any two equally coloured edges then break a k-set, so every
    /// colour is used once.
    ObstructionPairs {
        entries: Vec<ForcedPair>,
        bound: usize,
    },
    /// No canonical colouring with exactly `r` colours works.
    Exhaustion {
        objective: Objective,
        r: usize,
        colourings: u64,
        nodes: u64,
    },
}

fn inconsistent(msg: String) -> Error {
    Error::Inconsistent(msg)
}

impl Certificate {
    /// The smallest colour count not ruled out by this certificate alone.
    pub fn lower_bound(&self) -> usize {
        match self {
            Certificate::DistanceBound { length, .. } => *length,
            Certificate::ColourCollision { bound, .. } | Certificate::ObstructionPairs { bound, .. } => *bound,
            Certificate::Exhaustion { r, .. } => r + 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Certificate::DistanceBound { .. } => "distance_bound",
            Certificate::ColourCollision { .. } => "colour_collision",
            Certificate::ObstructionPairs { .. } => "obstruction_pair",
            Certificate::Exhaustion { .. } => "exhaustion",
        }
    }

    /// Re-derives the certificate for `(g, k)` from scratch.
    pub fn check(&self, g: &Graph, k: usize) -> Result<()> {
        match self {
            Certificate::DistanceBound { set, length } => {
                if set.len() != k {
                    return Err(inconsistent(format!(
                        "distance set has {} vertices, expected {k}",
                        set.len()
                    )));
                }
                let found = min_cycle_length_through(g, set, &mut Budget::unlimited())?;
                if found != Some(*length) {
                    return Err(inconsistent(format!(
                        "shortest cycle through {set:?} is {found:?}, certificate claims {length}"
                    )));
                }
            }
            Certificate::ColourCollision { rule, bound } => {
                let (m, n) = rule.shape();
                if rule.k() != k || rule.bound() != Some(*bound) {
                    return Err(inconsistent(format!(
                        "collision rule {rule:?} does not give {bound} for k={k}"
                    )));
                }
                if *g != complete_bipartite(m, n)? {
                    return Err(inconsistent(format!("collision rule needs K_{{{m},{n}}}")));
                }
            }
            Certificate::ObstructionPairs { entries, bound } => {
                let e = g.edge_count();
                if *bound != e {
                    return Err(inconsistent(format!("obstruction bound {bound} differs from e = {e}")));
                }
                let mut covered = vec![vec![false; e]; e];
                for ForcedPair { edges: (a, b), set } in entries {
                    if set.len() != k || a >= b || *b >= e {
                        return Err(inconsistent(format!("malformed obstruction entry {set:?}")));
                    }
                    if !forces(g, set, *a, *b)? {
                        return Err(inconsistent(format!("{set:?} does not force edges {a} and {b}")));
                    }
                    covered[*a][*b] = true;
                }
                for a in 0..e {
                    for b in a + 1..e {
                        if !covered[a][b] {
                            return Err(inconsistent(format!("edge pair ({a}, {b}) has no obstruction")));
                        }
                    }
                }
            }
            Certificate::Exhaustion { objective, r, .. } => {
                let mut budget = Budget::unlimited();
                let found = match objective {
                    Objective::Cycles => CycleIndex::build(g, k, &mut budget)?.search(*r, &mut budget)?.is_some(),
                    Objective::Trees => tree_search(g, k, *r, &mut budget)?.is_some(),
                };
                if found {
                    return Err(inconsistent(format!("a working {r}-colouring exists")));
                }
            }
        }
        Ok(())
    }
}

/// Every cycle through `set` uses both `a` and `b`, and some cycle exists.
pub(crate) fn forces(g: &Graph, set: &[usize], a: usize, b: usize) -> Result<bool> {
    if let [u, v] = set {
        return every_cycle_through_uses(g, *u, *v, a, b);
    }
    use crate::search::cycle_through;
    let mut budget = Budget::unlimited();
    if cycle_through(g, set, &mut budget)?.is_none() {
        return Ok(false);
    }
    for x in [a, b] {
        if cycle_through(&g.without_edge(x), set, &mut budget)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collision_bounds() {
        assert_eq!(CollisionRule::ColourSets { n: 36 }.bound(), Some(8));
        assert_eq!(CollisionRule::ColourSets { n: 35 }.bound(), Some(7));
        assert_eq!(CollisionRule::Star { k: 2, n: 5 }.bound(), Some(5));
        assert_eq!(CollisionRule::Star { k: 3, n: 5 }.bound(), Some(3));
        assert_eq!(CollisionRule::Vectors { m: 4, n: 10, k: 2 }.bound(), None);
    }
}
