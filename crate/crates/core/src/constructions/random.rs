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

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::generators::{complete, complete_multipartite};
use crate::graph::Graph;
use crate::search::{verify_k_rainbow_cycle_colouring, VerifyOptions};

/// A sampled colouring that passed verification, with the 1-based index of
/// the attempt that produced it.
#[derive(Debug, Clone)]
pub struct SampledColouring {
    pub colouring: EdgeColouring,
    pub attempt: usize,
}

/// Per-set node allowance while screening samples; a sample that needs more
/// counts as a failed attempt.
const SAMPLE_NODES_PER_SET: u64 = 200_000;

fn sample_until_certified(g: Graph, k: usize, r: usize, seed: u64, max_attempts: usize) -> Result<SampledColouring> {
    let g = Arc::new(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = VerifyOptions {
        nodes_per_set: SAMPLE_NODES_PER_SET,
        ..VerifyOptions::parallel()
    };
    for attempt in 1..=max_attempts {
        let colours: Vec<usize> = (0..g.edge_count()).map(|_| rng.random_range(0..r)).collect();
        let Ok(c) = EdgeColouring::new(g.clone(), colours, r) else {
            continue;
        };
        match verify_k_rainbow_cycle_colouring(&c, k, &opts) {
            Ok(rep) if rep.is_certified() => return Ok(SampledColouring { colouring: c, attempt }),
            Ok(_) | Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::AttemptsExhausted { attempts: max_attempts })
}

/// Samples uniform `(2k - 1)`-colourings of `K_n` from `seed` until one is a
/// verified k-rainbow cycle colouring.
pub fn colour_complete_random(n: usize, k: usize, seed: u64, max_attempts: usize) -> Result<SampledColouring> {
    if k < 3 || n < k {
        return Err(Error::InvalidParameter(format!(
            "random K_n colouring needs k >= 3 and n >= k, got n={n}, k={k}"
        )));
    }
    sample_until_certified(complete(n)?, k, 2 * k - 1, seed, max_attempts)
}

/// Samples uniform `2k`-colourings of the balanced `K_{t x n}` from `seed`
/// until one is a verified k-rainbow cycle colouring.
pub fn colour_balanced_multipartite_random(
    t: usize,
    n: usize,
    k: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<SampledColouring> {
    if t < 2 || k < 2 || n < k {
        return Err(Error::InvalidParameter(format!(
            "random K_(t x n) colouring needs t >= 2, k >= 2 and n >= k, got t={t}, n={n}, k={k}"
        )));
    }
    sample_until_certified(complete_multipartite(&vec![n; t])?, k, 2 * k, seed, max_attempts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_given_seed() {
        let a = colour_complete_random(6, 3, 7, 1);
        let b = colour_complete_random(6, 3, 7, 1);
        match (a, b) {
            (Ok(x), Ok(y)) => assert_eq!(x.colouring, y.colouring),
            (Err(x), Err(y)) => assert_eq!(x, y),
            _ => panic!("same seed gave different outcomes"),
        }
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(
            colour_complete_random(2, 3, 0, 5),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            colour_balanced_multipartite_random(3, 1, 2, 0, 5),
            Err(Error::InvalidParameter(_))
        ));
    }
}
