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
use crate::generators::wheel;

use super::{build, certify};

/// Colours for `W_n`, `k` vertices per rainbow cycle. Rim vertex `i` is
/// `v_i`, the centre is `v`; indices of `v_i` are taken mod `n`.
struct WheelPlan {
    n: usize,
    rim: Vec<usize>,
    spoke: Vec<usize>,
}

impl WheelPlan {
    fn new(n: usize, default: usize) -> Self {
        WheelPlan {
            n,
            rim: vec![default; n],
            spoke: vec![default; n],
        }
    }

    /// Rim edge `v_{i-1} v_i`, stored at index `i mod n`.
    fn rim_ending_at(&mut self, i: usize, c: usize) {
        self.rim[i % self.n] = c;
    }

    fn spoke(&mut self, i: usize, c: usize) {
        self.spoke[i % self.n] = c;
    }
}

fn triangle_matchings(p: &mut WheelPlan) {
    // W_3 = K_4 coloured by its three perfect matchings
    for i in 1..=3 {
        p.spoke(i, i - 1);
        p.rim_ending_at(i + 2, i - 1);
    }
}

fn plan(n: usize, k: usize) -> Result<WheelPlan> {
    let mut p = WheelPlan::new(n, 0);
    match (k, n) {
        (1, _) => {
            for i in 0..n {
                p.spoke(i, if i % 2 == 1 { 0 } else { 1 });
                p.rim_ending_at(i, 2);
            }
        }
        (2 | 3, 3) => triangle_matchings(&mut p),
        (2, _) => {
            let h = n.div_ceil(2);
            for i in 1..=n {
                p.rim_ending_at(i, (i - 1) % h);
            }
            for i in 0..n {
                p.spoke(i, if i < h { h } else { h + 1 });
            }
        }
        (3, 4..=7) => {
            for i in 1..=n {
                p.rim_ending_at(i, (i - 1) % (n - 2));
            }
            p.spoke(0, n - 2);
            p.spoke(1, n - 2);
            p.spoke(2, n - 1);
            p.spoke(n - 2, n - 1);
            p.spoke(n - 1, n - 1);
        }
        (3, 8..=11) => {
            p.rim_ending_at(1, 0);
            p.rim_ending_at(5, 0);
            p.rim_ending_at(3, 1);
            p.rim_ending_at(7, 1);
            for i in [2, 4, 6, 8] {
                p.spoke(i - 2, i / 2 + 1);
                p.rim_ending_at(i, i / 2 + 1);
            }
            for i in 9..=n {
                p.rim_ending_at(i, i - 3);
            }
            for i in [1, 3, 5, 7] {
                p.spoke(i, n - 2);
            }
        }
        (3, _) => {
            p.rim_ending_at(1, 0);
            p.rim_ending_at(7, 0);
            p.rim_ending_at(4, 1);
            p.rim_ending_at(10, 1);
            for i in [2, 5, 8, 11] {
                p.spoke(i - 2, 2 * (i + 1) / 3);
                p.rim_ending_at(i, 2 * (i + 1) / 3);
            }
            for i in [3, 6, 9] {
                p.spoke(i + 1, 2 * i / 3 + 1);
                p.rim_ending_at(i, 2 * i / 3 + 1);
            }
            p.spoke(1, 9);
            p.rim_ending_at(12, 9);
            for i in 13..=n {
                p.rim_ending_at(i, i - 3);
            }
        }
        _ if n < 2 * k => {
            // rainbow Hamilton cycle v, v_0, ..., v_{n-1}, v
            p.spoke(0, 0);
            for i in 1..n {
                p.rim_ending_at(i, i);
            }
            p.spoke(n - 1, n);
        }
        _ => {
            for i in 1..=n {
                p.rim_ending_at(i, i - 1);
            }
            let patterned = if k.is_multiple_of(2) { 2 * k } else { 2 * k - 6 };
            for j in 0..patterned {
                p.spoke(j, if j % 4 <= 1 { j + 1 } else { j - 2 });
            }
            if k % 2 == 1 {
                p.spoke(2 * k - 6, 2 * k - 5);
                p.spoke(2 * k - 2, 2 * k - 5);
                p.spoke(2 * k - 5, 2 * k - 3);
                p.spoke(2 * k - 1, 2 * k - 3);
                p.spoke(2 * k - 4, 2 * k - 6);
                p.spoke(2 * k - 3, 2 * k - 2);
            }
        }
    }
    Ok(p)
}

/// Number of colours the wheel scheme uses.
fn colour_count(n: usize, k: usize) -> usize {
    match k {
        1 => 3,
        2 | 3 if n == 3 => 3,
        2 => n.div_ceil(2) + 2,
        3 if n <= 7 => n,
        3 if n <= 11 => n - 1,
        3 => n - 2,
        _ if n < 2 * k => n + 1,
        _ => n,
    }
}

pub fn wheel_colouring(n: usize, k: usize) -> Result<EdgeColouring> {
    if n < 3 || k == 0 || k > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "wheel colouring needs n >= 3 and 1 <= k <= n + 1, got n={n}, k={k}"
        )));
    }
    let g = wheel(n)?;
    let p = plan(n, k)?;
    let colours = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            if b == n {
                p.spoke[a]
            } else if b == a + 1 {
                p.rim[b]
            } else {
                // the closing rim edge v_{n-1} v_0
                p.rim[0]
            }
        })
        .collect();
    build(g, colours, colour_count(n, k))
}

/// The wheel `W_n` coloured so that any `k` vertices lie on a rainbow
/// cycle, with the optimal number of colours.
pub fn colour_wheel(n: usize, k: usize) -> Result<EdgeColouring> {
    certify(wheel_colouring(n, k)?, k, "wheel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colour_counts() {
        assert_eq!(colour_wheel(5, 2).unwrap().r(), 5);
        assert_eq!(colour_wheel(3, 3).unwrap().r(), 3);
        assert_eq!(colour_wheel(12, 3).unwrap().r(), 10);
        assert_eq!(colour_wheel(8, 4).unwrap().r(), 8);
    }

    #[test]
    fn k_above_order_is_rejected() {
        assert!(wheel_colouring(4, 6).is_err());
    }
}
