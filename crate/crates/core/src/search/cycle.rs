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
use crate::cycles::{normalise_set, CycleQuery};
use crate::error::Result;
use crate::graph::Graph;

use super::witness::CycleWitness;

/// A rainbow cycle through every vertex of `set`, if one exists. The search
/// anchors at the lowest vertex of the set and tries neighbours in
/// ascending order, so the witness is deterministic.
pub fn rainbow_cycle_through(c: &EdgeColouring, set: &[usize], budget: &mut Budget) -> Result<Option<CycleWitness>> {
    let g = c.graph();
    let s = normalise_set(g, set)?;
    Ok(CycleQuery::new(g)
        .coloured(c.colours(), c.r())
        .find(&s, budget)?
        .map(|(vertices, edges)| CycleWitness { vertices, edges }))
}

/// Any cycle through `set`, ignoring colours.
pub fn cycle_through(g: &Graph, set: &[usize], budget: &mut Budget) -> Result<Option<CycleWitness>> {
    let s = normalise_set(g, set)?;
    Ok(CycleQuery::new(g)
        .find(&s, budget)?
        .map(|(vertices, edges)| CycleWitness { vertices, edges }))
}

/// Shortest cycle through `set`; `None` when no cycle contains it.
pub fn shortest_cycle_through(g: &Graph, set: &[usize], budget: &mut Budget) -> Result<Option<CycleWitness>> {
    let s = normalise_set(g, set)?;
    let d = g.all_distances();
    Ok(CycleQuery::new(g)
        .with_distances(&d)
        .shortest(&s, budget)?
        .map(|(vertices, edges)| CycleWitness { vertices, edges }))
}

/// Length of the shortest cycle through `set`; `None` stands for infinity.
pub fn min_cycle_length_through(g: &Graph, set: &[usize], budget: &mut Budget) -> Result<Option<usize>> {
    Ok(shortest_cycle_through(g, set, budget)?.map(|w| w.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, hypercube, wheel};

    #[test]
    fn antipodal_q3() {
        let q = hypercube(3).unwrap();
        assert_eq!(
            min_cycle_length_through(&q, &[0, 7], &mut Budget::unlimited()).unwrap(),
            Some(6)
        );
    }

    #[test]
    fn wheel_pair() {
        let w = wheel(5).unwrap();
        assert_eq!(
            min_cycle_length_through(&w, &[0, 2], &mut Budget::unlimited()).unwrap(),
            Some(4)
        );
    }

    #[test]
    fn cycle_pair() {
        let c = cycle(7).unwrap();
        assert_eq!(
            min_cycle_length_through(&c, &[1, 5], &mut Budget::unlimited()).unwrap(),
            Some(7)
        );
    }
}
