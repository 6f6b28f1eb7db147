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

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::generators::{gray_code, hypercube, CubeSplit};
use crate::graph::Graph;
use crate::search::{find_subdivided_closed_walk, WalkWitness};

use super::{build, certify, unsupported};

/// Dimension of the cube edge `(a, b)`.
fn dimension(a: usize, b: usize) -> usize {
    (a ^ b).trailing_zeros() as usize
}

/// The rainbow 4-cycle on every copy of `Q_2` spanned by dimensions 0 and 1.
fn square_colour(a: usize, d: usize) -> usize {
    match (d, a & 0b11) {
        (0, 0b00) => 0,
        (1, 0b01) => 1,
        (0, _) => 2,
        _ => 3,
    }
}

pub fn cube_colouring(n: usize, k: usize) -> Result<EdgeColouring> {
    if !(2..=20).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "cube colouring needs 2 <= n <= 20, got {n}"
        )));
    }
    let size = 1usize << n;
    if k == 0 || k > size {
        return Err(Error::InvalidParameter(format!("k = {k} outside 1..={size}")));
    }
    let g = hypercube(n)?;
    let (colours, r): (Vec<usize>, usize) = if k == 1 {
        let colours = g
            .edges()
            .iter()
            .map(|&(a, b)| match dimension(a, b) {
                d @ (0 | 1) => square_colour(a, d),
                _ => 0,
            })
            .collect();
        (colours, 4)
    } else if k <= 3 {
        let colours = g
            .edges()
            .iter()
            .map(|&(a, b)| match dimension(a, b) {
                d @ (0 | 1) => square_colour(a, d),
                d => 2 * d + ((a & ((1 << d) - 1)).count_ones() as usize % 2),
            })
            .collect();
        (colours, 2 * n)
    } else if k >= size / 2 {
        let mut colours = vec![0; g.edge_count()];
        for i in 0..size {
            let e = g
                .edge_id(gray_code(i), gray_code((i + 1) % size))
                .expect("consecutive Gray codes are adjacent");
            colours[e] = i;
        }
        (colours, size)
    } else {
        return Err(unsupported(format!(
            "Q_{n} with 4 <= k={k} < 2^(n-1) needs the recursive construction"
        )));
    };
    build(g, colours, r)
}

/// `Q_n` coloured for `k` in the three regimes with exact colour counts:
/// 4 for `k = 1`, `2n` for `k` in `{2, 3}`, and `2^n` for `k >= 2^(n-1)`.
pub fn colour_cube(n: usize, k: usize) -> Result<EdgeColouring> {
    certify(cube_colouring(n, k)?, k, "cube")
}

/// Recursion tree of the block construction on `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubePlan {
    /// `Q_n` with every edge its own colour.
    Base { n: usize },
    /// `Q_{p+q} = Q_p ⊕ Q_q`; edges inside a copy of `Q_p` follow `hat`,
    /// edges inside a copy of `Q_q` follow `tilde` with shifted colours.
    Split {
        split: CubeSplit,
        hat: Box<CubePlan>,
        tilde: Box<CubePlan>,
    },
}

impl CubePlan {
    pub fn new(n: usize, block: usize) -> Self {
        if n < 2 * block {
            CubePlan::Base { n }
        } else {
            CubePlan::Split {
                split: CubeSplit::new(n - block, block),
                hat: Box::new(CubePlan::new(n - block, block)),
                tilde: Box::new(CubePlan::Base { n: block }),
            }
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CubePlan::Base { n } => *n,
            CubePlan::Split { split, .. } => split.n(),
        }
    }

    pub fn colour_count(&self) -> usize {
        match self {
            CubePlan::Base { n } => n << (n - 1),
            CubePlan::Split { hat, tilde, .. } => hat.colour_count() + tilde.colour_count(),
        }
    }

    /// Colour of the cube edge `(a, b)` of `Q_{self.n()}`.
    fn colour(&self, g_cache: &CubeCache, a: usize, b: usize) -> usize {
        match self {
            CubePlan::Base { n } => g_cache.get(*n).edge_id(a, b).expect("cube edge"),
            CubePlan::Split { split, hat, tilde } => {
                if split.tilde(a) == split.tilde(b) {
                    hat.colour(g_cache, split.hat(a), split.hat(b))
                } else {
                    hat.colour_count() + tilde.colour(g_cache, split.tilde(a), split.tilde(b))
                }
            }
        }
    }

    /// Dimension ranges `(lo, mid, hi)` of every split: the first factor owns
    /// dimensions `lo..mid`, the second `mid..hi`.
    fn levels(&self, lo: usize, out: &mut Vec<(usize, usize, usize)>) {
        if let CubePlan::Split { split, hat, tilde } = self {
            out.push((lo, lo + split.p, lo + split.n()));
            hat.levels(lo, out);
            tilde.levels(lo + split.p, out);
        }
    }

    fn spliced_walk(&self, cache: &CubeCache, tuple: &[usize], budget: &mut Budget) -> Result<Option<WalkWitness>> {
        match self {
            CubePlan::Base { n } => match find_subdivided_closed_walk(cache.get(*n), tuple, None, budget) {
                Ok(w) => Ok(Some(w)),
                Err(Error::WalkNotFound) => Ok(None),
                Err(e) => Err(e),
            },
            CubePlan::Split { split, hat, tilde } => {
                let hats: Vec<usize> = tuple.iter().map(|&v| split.hat(v)).collect();
                let tildes: Vec<usize> = tuple.iter().map(|&v| split.tilde(v)).collect();
                let Some(lw) = hat.spliced_walk(cache, &hats, budget)? else {
                    return Ok(None);
                };
                let Some(mw) = tilde.spliced_walk(cache, &tildes, budget)? else {
                    return Ok(None);
                };
                let k = tuple.len();
                let paths = (0..k)
                    .map(|i| {
                        let j = (i + 1) % k;
                        if tuple[i] == tuple[j] {
                            vec![tuple[i]]
                        } else if hats[i] == hats[j] {
                            mw.paths[i].iter().map(|&t| split.join(hats[i], t)).collect()
                        } else {
                            let l = &lw.paths[i];
                            let u = l[1];
                            let mut p = vec![tuple[i]];
                            p.extend(mw.paths[i].iter().map(|&t| split.join(u, t)));
                            p.extend(l[2..].iter().map(|&h| split.join(h, tildes[j])));
                            p
                        }
                    })
                    .collect();
                Ok(Some(WalkWitness {
                    anchors: tuple.to_vec(),
                    paths,
                }))
            }
        }
    }
}

/// Hypercubes by dimension, built on first use.
struct CubeCache {
    cubes: Vec<Option<Graph>>,
}

impl CubeCache {
    fn new(plan: &CubePlan) -> Self {
        let mut cubes = vec![None; plan.n() + 1];
        let mut stack = vec![plan];
        while let Some(p) = stack.pop() {
            match p {
                CubePlan::Base { n } => cubes[*n] = Some(hypercube(*n).expect("valid dimension")),
                CubePlan::Split { hat, tilde, .. } => {
                    stack.push(hat);
                    stack.push(tilde);
                }
            }
        }
        cubes[plan.n()] = Some(hypercube(plan.n()).expect("valid dimension"));
        CubeCache { cubes }
    }

    fn get(&self, n: usize) -> &Graph {
        self.cubes[n].as_ref().expect("cube cached")
    }
}

/// How a walk for a tuple was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WalkRoute {
    /// Spliced from walks in the two factors.
    Spliced,
    /// Found by searching the full cube under the colouring.
    Direct,
}

/// Colour budget `2^(2K - 1) * n`, saturating.
pub fn cube_colour_budget(block: usize, n: usize) -> u128 {
    let exp = (2 * block).saturating_sub(1).min(120) as u32;
    (1u128 << exp).saturating_mul(n as u128)
}

#[derive(Debug, Clone)]
pub struct RecursiveCubeColouring {
    pub colouring: EdgeColouring,
    pub plan: CubePlan,
    pub k: usize,
    pub block: usize,
    cache: Arc<CubeCache>,
}

impl std::fmt::Debug for CubeCache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CubeCache").finish_non_exhaustive()
    }
}

impl RecursiveCubeColouring {
    /// At every split, the colours on the two factors' edges are disjoint.
    pub fn layers_disjoint(&self) -> bool {
        let g = self.colouring.graph();
        let mut levels = Vec::new();
        self.plan.levels(0, &mut levels);
        levels.into_iter().all(|(lo, mid, hi)| {
            let mut first = BTreeSet::new();
            let mut second = BTreeSet::new();
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let d = dimension(a, b);
                if (lo..mid).contains(&d) {
                    first.insert(self.colouring.colour(e));
                } else if (mid..hi).contains(&d) {
                    second.insert(self.colouring.colour(e));
                }
            }
            first.is_disjoint(&second)
        })
    }

    /// A rainbow S-subdivided closed walk for `tuple`, validated against the
    /// colouring. Splicing is tried first, then a direct search.
    pub fn walk_for(&self, tuple: &[usize], budget: &mut Budget) -> Result<(WalkWitness, WalkRoute)> {
        let g = self.colouring.graph();
        if tuple.len() != self.k || tuple.iter().any(|&v| v >= g.n()) {
            return Err(Error::InvalidParameter(format!(
                "expected {} vertices of Q_{}",
                self.k,
                self.plan.n()
            )));
        }
        if let Some(w) = self.plan.spliced_walk(&self.cache, tuple, budget)? {
            w.validate(g, Some(&self.colouring))?;
            return Ok((w, WalkRoute::Spliced));
        }
        match find_subdivided_closed_walk(g, tuple, Some(&self.colouring), budget) {
            Ok(w) => {
                w.validate(g, Some(&self.colouring))?;
                Ok((w, WalkRoute::Direct))
            }
            Err(Error::WalkNotFound) => Err(Error::BaseWalkNotFound { tuple: tuple.to_vec() }),
            Err(e) => Err(e),
        }
    }

    /// Draws `samples` uniform ordered k-tuples from `seed` and looks for a
    /// walk for each, spending at most `nodes_per_tuple` search nodes per
    /// tuple.
    pub fn sample_walks(&self, samples: usize, seed: u64, nodes_per_tuple: u64) -> Result<WalkSample> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = self.colouring.graph().n();
        let mut report = WalkSample::default();
        for _ in 0..samples {
            let tuple: Vec<usize> = (0..self.k).map(|_| rng.random_range(0..size)).collect();
            match self.walk_for(&tuple, &mut Budget::new(nodes_per_tuple)) {
                Ok((_, WalkRoute::Spliced)) => report.spliced += 1,
                Ok((_, WalkRoute::Direct)) => report.direct += 1,
                Err(Error::BaseWalkNotFound { tuple }) => report.missing.push(tuple),
                Err(Error::BudgetExceeded { .. }) => report.undecided.push(tuple),
                Err(e) => return Err(e),
            }
        }
        Ok(report)
    }

    /// Like [`Self::sample_walks`] but fails on the first tuple without a
    /// walk.
    pub fn check_sampled_tuples(&self, samples: usize, seed: u64, nodes_per_tuple: u64) -> Result<WalkSample> {
        let report = self.sample_walks(samples, seed, nodes_per_tuple)?;
        if let Some(tuple) = report.missing.first() {
            return Err(Error::BaseWalkNotFound { tuple: tuple.clone() });
        }
        if !report.undecided.is_empty() {
            return Err(Error::BudgetExceeded { limit: nodes_per_tuple });
        }
        Ok(report)
    }
}

/// Outcome of [`RecursiveCubeColouring::sample_walks`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WalkSample {
    pub spliced: usize,
    pub direct: usize,
    /// Tuples for which exhaustive search found no rainbow walk.
    pub missing: Vec<Vec<usize>>,
    /// Tuples whose search ran out of nodes.
    pub undecided: Vec<Vec<usize>>,
}

impl WalkSample {
    pub fn all_found(&self) -> bool {
        self.missing.is_empty() && self.undecided.is_empty()
    }
}

/// Block construction on `Q_n` for `k >= 4` with block size `K`: a rainbow
/// cube when `n < 2K`, otherwise `Q_{n-K} ⊕ Q_K` with the two factors
/// coloured recursively from disjoint palettes. The palettes are checked
/// here; whether every k-tuple has a rainbow walk is checked by sampling
/// with [`RecursiveCubeColouring::check_sampled_tuples`].
pub fn colour_cube_recursive(n: usize, k: usize, block: usize) -> Result<RecursiveCubeColouring> {
    if k < 4 || block < 2 || n == 0 || n > 20 {
        return Err(Error::InvalidParameter(format!(
            "recursive cube needs k >= 4, K >= 2 and 1 <= n <= 20, got n={n}, k={k}, K={block}"
        )));
    }
    let plan = CubePlan::new(n, block);
    let cache = Arc::new(CubeCache::new(&plan));
    let g = cache.get(n).clone();
    let colours = g.edges().iter().map(|&(a, b)| plan.colour(&cache, a, b)).collect();
    let colouring = EdgeColouring::new(Arc::new(g), colours, plan.colour_count())?;
    let out = RecursiveCubeColouring {
        colouring,
        plan,
        k,
        block,
        cache,
    };
    if !out.layers_disjoint() {
        return Err(Error::Inconsistent("factor palettes overlap".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes() {
        assert_eq!(colour_cube(3, 1).unwrap().r(), 4);
        assert_eq!(colour_cube(3, 3).unwrap().r(), 6);
        assert_eq!(colour_cube(2, 2).unwrap().r(), 4);
        assert_eq!(colour_cube(3, 4).unwrap().r(), 8);
        assert!(matches!(cube_colouring(4, 4), Err(Error::RegimeUnsupported(_))));
    }

    #[test]
    fn recursive_small() {
        let c = colour_cube_recursive(6, 4, 3).unwrap();
        assert_eq!(c.colouring.r(), 24);
        assert!(c.layers_disjoint());
        let base = colour_cube_recursive(3, 4, 3).unwrap();
        assert_eq!(base.plan, CubePlan::Base { n: 3 });
        assert_eq!(base.colouring.r(), 12);
        // 4 is an anchor twice, so four path ends meet at a degree-3 vertex
        assert_eq!(
            base.walk_for(&[4, 5, 4, 0], &mut Budget::unlimited()).unwrap_err(),
            Error::BaseWalkNotFound {
                tuple: vec![4, 5, 4, 0]
            }
        );
    }

    #[test]
    fn rainbow_q5_base_walks() {
        let c = colour_cube_recursive(5, 4, 3).unwrap();
        let (w, route) = c.walk_for(&[0, 31, 5, 12], &mut Budget::unlimited()).unwrap();
        assert_eq!(route, WalkRoute::Spliced);
        w.validate(c.colouring.graph(), Some(&c.colouring)).unwrap();
    }
}
