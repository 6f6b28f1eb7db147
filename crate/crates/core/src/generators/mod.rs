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

//! Named graph families with fixed labellings.
//!
//! | family | labelling |
//! |---|---|
//! | cycle | `i ~ i+1 mod n` |
//! | wheel | rim `0..n` in cyclic order, centre `n` |
//! | complete bipartite | classes `0..m` and `m..m+n` |
//! | complete multipartite | contiguous classes in the given order |
//! | hypercube | vertex id is the coordinate vector, bit `i` = coordinate `i` |
//! | Petersen | outer `i ~ i+1 mod 5`, spokes `i ~ i+5`, inner `i+5 ~ (i+2 mod 5)+5` |
//! | path-cycle join | path `0..k-1`, then cycle `k-1..k-1+kt` |

mod cube;
mod family;
mod hadamard;

pub use cube::{gray_code, CubeSplit};
pub use family::{Family, FAMILY_NAMES};
pub use hadamard::{hadamard_spread_vertices, sylvester_hadamard, HadamardMatrix};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(invalid("complete bipartite classes must be non-empty"));
    }
    Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Class sizes must be positive and nondecreasing, with at least two classes.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph> {
    if sizes.len() < 2 {
        return Err(invalid("complete multipartite needs at least two classes"));
    }
    if sizes.contains(&0) {
        return Err(invalid("class sizes must be positive"));
    }
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(invalid("class sizes must be nondecreasing"));
    }
    let class = class_labels(sizes);
    let n = class.len();
    Graph::new(
        n,
        (0..n).flat_map(|u| {
            let class = &class;
            (u + 1..n).filter(move |&v| class[u] != class[v]).map(move |v| (u, v))
        }),
    )
}

/// Class index of every vertex under the contiguous labelling.
pub fn class_labels(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect()
}

pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("wheel needs n >= 3, got {n}")));
    }
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n));
    Graph::new(n + 1, rim.chain(spokes))
}

pub fn hypercube(n: usize) -> Result<Graph> {
    if n == 0 || n > 20 {
        return Err(invalid(format!("hypercube dimension must be in 1..=20, got {n}")));
    }
    let size = 1usize << n;
    Graph::new(
        size,
        (0..size).flat_map(|v| (0..n).map(move |i| (v, v ^ (1 << i))).filter(|&(a, b)| a < b)),
    )
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
}

/// A path on `k - 1` vertices joined completely to a cycle on `k * t`
/// vertices. For `k = 1` this is the cycle `C_t`.
pub fn path_cycle_join(k: usize, t: usize) -> Result<Graph> {
    if k == 0 || k * t < 3 {
        return Err(invalid(format!(
            "path-cycle join needs k >= 1 and kt >= 3, got k={k}, t={t}"
        )));
    }
    let p = k - 1;
    let c = k * t;
    let mut edges: Vec<(usize, usize)> = (1..p).map(|j| (j - 1, j)).collect();
    edges.extend((0..c).map(|i| (p + i, p + (i + 1) % c)));
    for j in 0..p {
        edges.extend((0..c).map(|i| (j, p + i)));
    }
    Graph::new(p + c, edges)
}

/// Two vertices `0` and `1` joined by internally disjoint paths of the
/// given lengths (at most one of length 1).
pub fn theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.len() < 2 || lengths.contains(&0) || lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(invalid(
            "theta needs at least two paths, positive lengths, at most one edge",
        ));
    }
    let mut n = 2;
    let mut edges = Vec::new();
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    let total = n;
    Graph::new(total, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(wheel(3).unwrap(), complete(4).unwrap());
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));
        let p = petersen();
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let j = path_cycle_join(3, 3).unwrap();
        assert_eq!((j.n(), j.edge_count()), (11, 28));
        assert_eq!(path_cycle_join(1, 5).unwrap(), cycle(5).unwrap());
        assert_eq!(complete_multipartite(&[1, 2, 3]).unwrap().edge_count(), 11);
        let t = theta(&[2, 2, 1]).unwrap();
        assert_eq!((t.n(), t.edge_count()), (4, 5));
    }

    #[test]
    fn join_with_single_path_vertex_is_a_wheel() {
        let j = path_cycle_join(2, 3).unwrap();
        // wheel(6) puts the centre last; the join puts it first
        let relabel = |v: usize| if v == 0 { 6 } else { v - 1 };
        let mapped = Graph::new(7, j.edges().iter().map(|&(a, b)| (relabel(a), relabel(b)))).unwrap();
        assert_eq!(mapped, wheel(6).unwrap());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(cycle(2).is_err());
        assert!(wheel(2).is_err());
        assert!(complete_multipartite(&[3, 1]).is_err());
        assert!(path_cycle_join(1, 2).is_err());
    }
}
