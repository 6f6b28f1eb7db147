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

use std::collections::HashMap;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::generators::complete_bipartite;

fn check_bipartite(c: &EdgeColouring, m: usize) -> Result<usize> {
    let g = c.graph();
    if m == 0 || m >= g.n() {
        return Err(Error::InvalidParameter(format!("class size {m} out of range")));
    }
    let n = g.n() - m;
    if *g != complete_bipartite(m, n)? {
        return Err(Error::InvalidGraph(format!(
            "expected K_{{{m},{n}}} in standard labelling"
        )));
    }
    Ok(n)
}

/// Colour vector of `v`: the colours of its edges to `0..m`, in order.
fn colour_vector(c: &EdgeColouring, m: usize, v: usize) -> Vec<usize> {
    let g = c.graph();
    (0..m)
        .map(|u| c.colour(g.edge_id(u, v).expect("complete bipartite")))
        .collect()
}

/// In `K_{m,n}` (small class `0..m`), `k` vertices of the large class that
/// share the same colour vector. Returns the first such set found scanning
/// the large class in ascending order.
pub fn colour_class_collision(c: &EdgeColouring, m: usize, k: usize) -> Result<Option<Vec<usize>>> {
    let n = check_bipartite(c, m)?;
    if k < 2 {
        return Err(Error::InvalidParameter("collisions need k >= 2".into()));
    }
    let mut classes: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in m..m + n {
        let members = classes.entry(colour_vector(c, m, v)).or_default();
        members.push(v);
        if members.len() == k {
            return Ok(Some(members.clone()));
        }
    }
    Ok(None)
}

/// A pair `x < y` of large-class vertices whose incident edges use at most
/// three colours in total. A cycle through both uses four distinct edges at
/// them, so it cannot be rainbow.
pub fn colour_set_collision(c: &EdgeColouring, m: usize) -> Result<Option<(usize, usize)>> {
    let n = check_bipartite(c, m)?;
    let sets: Vec<Vec<usize>> = (m..m + n)
        .map(|v| {
            let mut s = colour_vector(c, m, v);
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    for y in 0..n {
        for x in 0..y {
            if sets[x].len() + sets[y].len() > 6 {
                continue;
            }
            let mut union = sets[x].clone();
            union.extend_from_slice(&sets[y]);
            union.sort_unstable();
            union.dedup();
            if union.len() <= 3 {
                return Ok(Some((x + m, y + m)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn equal_vectors_collide() {
        let g = Arc::new(complete_bipartite(2, 4).unwrap());
        // vertices 2 and 4 get vector (0, 1); 3 and 5 get (1, 0)
        let colours: Vec<usize> = g.edges().iter().map(|&(u, v)| (u + v) % 2).collect();
        let c = EdgeColouring::new(g, colours, 2).unwrap();
        assert_eq!(colour_class_collision(&c, 2, 2).unwrap(), Some(vec![2, 4]));
        assert_eq!(colour_class_collision(&c, 2, 3).unwrap(), None);
    }

    #[test]
    fn few_colours_on_a_pair() {
        let g = Arc::new(complete_bipartite(3, 3).unwrap());
        let c = EdgeColouring::from_raw(g, &[0, 0, 1, 1, 2, 3, 2, 1, 4]).unwrap();
        assert_eq!(colour_set_collision(&c, 3).unwrap(), Some((3, 4)));
    }
}
