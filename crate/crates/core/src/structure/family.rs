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
use crate::cycles::CycleQuery;
use crate::error::Result;
use crate::graph::Graph;
use crate::subsets::Combinations;

use super::blocks::block_decomposition;
use super::connectivity::is_two_connected;

/// Every vertex lies in a block that contains a cycle.
pub fn every_vertex_on_cycle(g: &Graph) -> bool {
    let d = block_decomposition(g);
    let mut covered = vec![false; g.n()];
    for b in d.blocks.iter().filter(|b| b.is_two_connected()) {
        for &v in &b.vertices {
            covered[v] = true;
        }
    }
    covered.iter().all(|&c| c)
}

/// Any `k` vertices lie on a common cycle. Exponential for `k >= 3`.
pub fn in_family_fk(g: &Graph, k: usize) -> bool {
    in_family_fk_within(g, k, &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn in_family_fk_within(g: &Graph, k: usize, budget: &mut Budget) -> Result<bool> {
    assert!(k >= 1, "k must be positive");
    if k > g.n() {
        return Ok(false);
    }
    match k {
        1 => Ok(every_vertex_on_cycle(g)),
        2 => Ok(is_two_connected(g)),
        _ => {
            if !is_two_connected(g) {
                return Ok(false);
            }
            let q = CycleQuery::new(g);
            for set in Combinations::new(g.n(), k) {
                if q.find(&set, budget)?.is_none() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}
