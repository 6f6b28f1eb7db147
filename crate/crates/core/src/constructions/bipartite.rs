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
use crate::generators::complete_bipartite;
use crate::subsets::{binomial, Combinations};

use super::{build, certify, unsupported};

/// Colouring schemes for `K_{m,n}` with classes `U = 0..m`, `V = m..m+n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BipartiteScheme {
    /// The applicable scheme with the fewest colours.
    Auto,
    /// `k = 1`: four colours around a fixed edge `u_1 v_1`.
    Spanning4,
    /// `m = k` (including `k = m = 2`): every edge its own colour.
    Rainbow,
    /// `k = 2`, `m = 3`, `n >= 36`: colour sets of `V` are distinct 3-sets
    /// taken in colex order.
    Colex,
    /// `k = 2`, `m >= 4`: eight colours via four vector patterns.
    EightColour,
    /// `m >= 3k`: `6k` colours via cyclic shifts on `2k x 2k` corners.
    SixK,
}

impl BipartiteScheme {
    pub const ALL: [BipartiteScheme; 6] = [
        BipartiteScheme::Auto,
        BipartiteScheme::Spanning4,
        BipartiteScheme::Rainbow,
        BipartiteScheme::Colex,
        BipartiteScheme::EightColour,
        BipartiteScheme::SixK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BipartiteScheme::Auto => "auto",
            BipartiteScheme::Spanning4 => "spanning4",
            BipartiteScheme::Rainbow => "rainbow",
            BipartiteScheme::Colex => "colex",
            BipartiteScheme::EightColour => "eight",
            BipartiteScheme::SixK => "six-k",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Whether the scheme covers `(m, n, k)`.
    pub fn applies(self, m: usize, n: usize, k: usize) -> bool {
        match self {
            BipartiteScheme::Auto => Self::pick(m, n, k).is_some(),
            BipartiteScheme::Spanning4 => k == 1,
            BipartiteScheme::Rainbow => k >= 2 && m == k,
            BipartiteScheme::Colex => k == 2 && m == 3 && n >= 36,
            BipartiteScheme::EightColour => k == 2 && m >= 4,
            BipartiteScheme::SixK => k >= 2 && m >= 3 * k,
        }
    }

    fn pick(m: usize, n: usize, k: usize) -> Option<Self> {
        [
            BipartiteScheme::Spanning4,
            BipartiteScheme::Colex,
            BipartiteScheme::EightColour,
            BipartiteScheme::SixK,
            BipartiteScheme::Rainbow,
        ]
        .into_iter()
        .find(|s| s.applies(m, n, k))
    }
}

/// Smallest `r` with `n <= C(r, 3)`.
fn colex_colours(n: usize) -> usize {
    (3..).find(|&r| binomial(r, 3) >= n as u128).expect("some r works")
}

pub fn bipartite_colouring(m: usize, n: usize, k: usize, scheme: BipartiteScheme) -> Result<EdgeColouring> {
    if m < 2 || m > n || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "K_{{m,n}} colouring needs 2 <= m <= n and k >= 1, got m={m}, n={n}, k={k}"
        )));
    }
    let scheme = match scheme {
        BipartiteScheme::Auto => BipartiteScheme::pick(m, n, k),
        s => Some(s).filter(|s| s.applies(m, n, k)),
    }
    .ok_or_else(|| unsupported(format!("no {} scheme for K_{{{m},{n}}} with k={k}", scheme.name())))?;
    let g = complete_bipartite(m, n)?;
    // colour of u_i v_j with 0-based i < m, j < n
    let (phi, r): (Box<dyn Fn(usize, usize) -> usize>, usize) = match scheme {
        BipartiteScheme::Spanning4 => (
            Box::new(|i, j| match (i, j) {
                (0, 0) => 0,
                (0, _) => 1,
                (_, 0) => 2,
                _ => 3,
            }),
            4,
        ),
        BipartiteScheme::Rainbow => (Box::new(move |i, j| i * n + j), m * n),
        BipartiteScheme::Colex => {
            let r = colex_colours(n);
            let labels: Vec<Vec<usize>> = Combinations::new(r, 3).take(n - 3).collect();
            (
                Box::new(move |i, j| match j {
                    0..=2 if (i + 3 - j) % 3 == 1 => r - 2,
                    0..=2 if (j + 3 - i) % 3 == 1 => r - 1,
                    0..=2 => r - 5 + i,
                    _ => labels[j - 3][i],
                }),
                r,
            )
        }
        BipartiteScheme::EightColour => (
            Box::new(|i, j| {
                let c = i.min(3);
                match j {
                    0 => 3 - c,
                    1 => 4 + c,
                    2 => 7 - c,
                    _ => c,
                }
            }),
            8,
        ),
        BipartiteScheme::SixK => {
            let h = 2 * k;
            (
                Box::new(move |i, j| match (i < h, j < h) {
                    (true, true) => (i + h - j) % h,
                    (false, true) => h + j,
                    (true, false) => 2 * h + i,
                    (false, false) => 0,
                }),
                6 * k,
            )
        }
        BipartiteScheme::Auto => unreachable!("resolved above"),
    };
    let colours = g.edges().iter().map(|&(u, v)| phi(u, v - m)).collect();
    build(g, colours, r)
}

/// `K_{m,n}` coloured for `k` with the regime's scheme of fewest colours.
pub fn colour_bipartite(m: usize, n: usize, k: usize) -> Result<EdgeColouring> {
    colour_bipartite_with(m, n, k, BipartiteScheme::Auto)
}

pub fn colour_bipartite_with(m: usize, n: usize, k: usize, scheme: BipartiteScheme) -> Result<EdgeColouring> {
    certify(bipartite_colouring(m, n, k, scheme)?, k, "complete bipartite")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regime_colour_counts() {
        assert_eq!(colour_bipartite(2, 5, 1).unwrap().r(), 4);
        assert_eq!(colour_bipartite(2, 4, 2).unwrap().r(), 8);
        assert_eq!(colour_bipartite(4, 6, 2).unwrap().r(), 8);
        assert_eq!(colour_bipartite_with(6, 6, 2, BipartiteScheme::SixK).unwrap().r(), 12);
    }

    #[test]
    fn colex_for_k36() {
        assert_eq!(colex_colours(36), 8);
        assert_eq!(colour_bipartite(3, 36, 2).unwrap().r(), 8);
    }

    #[test]
    fn open_regime_is_unsupported() {
        assert!(matches!(colour_bipartite(4, 5, 3), Err(Error::RegimeUnsupported(_))));
    }
}
