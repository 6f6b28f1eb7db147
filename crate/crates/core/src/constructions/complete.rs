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

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::generators::{class_labels, complete, complete_multipartite};

use super::{build, certify};

/// Colour matrix of a 3-colouring of `K_n` in which every pair of vertices
/// lies on a rainbow triangle, built one vertex at a time.
fn two_rainbow_matrix(n: usize) -> Vec<Vec<usize>> {
    let mut phi = vec![vec![usize::MAX; n]; n];
    let set = |phi: &mut Vec<Vec<usize>>, a: usize, b: usize, c: usize| {
        phi[a][b] = c;
        phi[b][a] = c;
    };
    set(&mut phi, 0, 1, 0);
    set(&mut phi, 1, 2, 1);
    set(&mut phi, 0, 2, 2);
    for u in 3..n {
        let mut rest: Vec<usize> = (0..u).collect();
        if u % 2 == 1 {
            let t = lex_least_rainbow_triangle(&phi, u);
            for i in 0..3 {
                let c = phi[t[(i + 1) % 3]][t[(i + 2) % 3]];
                set(&mut phi, u, t[i], c);
            }
            rest.retain(|v| !t.contains(v));
        }
        for pair in rest.chunks(2) {
            let (v, w) = (pair[0], pair[1]);
            let others: Vec<usize> = (0..3).filter(|&c| c != phi[v][w]).collect();
            set(&mut phi, u, v, others[0]);
            set(&mut phi, u, w, others[1]);
        }
    }
    phi
}

fn lex_least_rainbow_triangle(phi: &[Vec<usize>], order: usize) -> [usize; 3] {
    for a in 0..order {
        for b in a + 1..order {
            for c in b + 1..order {
                let cols = [phi[a][b], phi[b][c], phi[a][c]];
                if cols[0] != cols[1] && cols[1] != cols[2] && cols[0] != cols[2] {
                    return [a, b, c];
                }
            }
        }
    }
    unreachable!("the first three vertices always form a rainbow triangle")
}

pub fn complete_2rainbow_colouring(n: usize) -> Result<EdgeColouring> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("K_n needs n >= 3, got {n}")));
    }
    let g = complete(n)?;
    let phi = two_rainbow_matrix(n);
    let colours = g.edges().iter().map(|&(a, b)| phi[a][b]).collect();
    build(g, colours, 3)
}

/// A 3-colouring of `K_n` with every pair of vertices on a rainbow triangle.
pub fn colour_complete_2rainbow(n: usize) -> Result<EdgeColouring> {
    certify(complete_2rainbow_colouring(n)?, 2, "complete 2-rainbow")
}

pub fn multipartite_blowup_colouring(sizes: &[usize]) -> Result<EdgeColouring> {
    let t = sizes.len();
    if t < 3 {
        return Err(Error::InvalidParameter(format!(
            "blow-up needs at least 3 classes, got {t}"
        )));
    }
    let g = complete_multipartite(sizes)?;
    let phi = two_rainbow_matrix(t);
    let class = class_labels(sizes);
    let colours = g.edges().iter().map(|&(a, b)| phi[class[a]][class[b]]).collect();
    build(g, colours, 3)
}

/// The 3-colouring of `K_{n_1,...,n_t}` inherited from the pair colouring
/// of `K_t`: an edge takes the colour of its two classes.
pub fn colour_multipartite_blowup(sizes: &[usize]) -> Result<EdgeColouring> {
    certify(multipartite_blowup_colouring(sizes)?, 1, "multipartite blow-up")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_complete_graphs() {
        for n in 3..=7 {
            assert_eq!(colour_complete_2rainbow(n).unwrap().r(), 3);
        }
    }

    #[test]
    fn blowups() {
        assert_eq!(colour_multipartite_blowup(&[1, 1, 1]).unwrap().used_count(), 3);
        colour_multipartite_blowup(&[2, 2, 2]).unwrap();
        colour_multipartite_blowup(&[1, 2, 3]).unwrap();
    }
}
