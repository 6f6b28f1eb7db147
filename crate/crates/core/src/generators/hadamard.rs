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

use crate::error::{Error, Result};

/// A `q x q` matrix with entries in {-1, +1} and pairwise orthogonal columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.order + col]
    }

    pub fn column(&self, col: usize) -> Vec<i8> {
        (0..self.order).map(|r| self.get(r, col)).collect()
    }

    pub fn columns_orthogonal(&self) -> bool {
        (0..self.order).all(|a| {
            (a + 1..self.order).all(|b| {
                (0..self.order)
                    .map(|r| i32::from(self.get(r, a)) * i32::from(self.get(r, b)))
                    .sum::<i32>()
                    == 0
            })
        })
    }
}

/// Sylvester's doubling: `H_1 = (1)`, `H_2q = [[H, H], [H, -H]]`.
pub fn sylvester_hadamard(t: u32) -> HadamardMatrix {
    let mut order = 1;
    let mut entries = vec![1i8];
    for _ in 0..t {
        let next = order * 2;
        let mut grown = vec![0i8; next * next];
        for r in 0..order {
            for c in 0..order {
                let x = entries[r * order + c];
                grown[r * next + c] = x;
                grown[r * next + c + order] = x;
                grown[(r + order) * next + c] = x;
                grown[(r + order) * next + c + order] = -x;
            }
        }
        order = next;
        entries = grown;
    }
    HadamardMatrix { order, entries }
}

/// `k` vertices of `Q_n` with large pairwise Hamming distance, built from
/// the columns of a Sylvester matrix blown up over a balanced partition of
/// the coordinates. Vertex ids use bit `i` for coordinate `i`.
pub fn hadamard_spread_vertices(k: usize, n: usize) -> Result<Vec<u128>> {
    if k < 2 {
        return Err(Error::InvalidParameter("spread needs k >= 2".into()));
    }
    if n == 0 || n > 128 {
        return Err(Error::InvalidParameter(format!(
            "dimension must be in 1..=128, got {n}"
        )));
    }
    let kp = k.next_power_of_two();
    if n < (kp - 1) * (kp - 1) {
        return Err(Error::InvalidParameter(format!(
            "spread for k={k} needs n >= {}, got {n}",
            (kp - 1) * (kp - 1)
        )));
    }
    let t = kp.trailing_zeros();
    let h = sylvester_hadamard(t);
    let parts = kp - 1;
    let base = n / parts;
    let extra = n % parts;
    // part j owns a contiguous run of base (+1 for the first `extra`) coordinates
    let mut part_of = Vec::with_capacity(n);
    for j in 0..parts {
        let size = base + usize::from(j < extra);
        part_of.extend(std::iter::repeat_n(j, size));
    }
    let vertices: Vec<u128> = (0..k)
        .map(|col| {
            (0..n)
                .filter(|&i| h.get(part_of[i] + 1, col) == 1)
                .fold(0u128, |acc, i| acc | (1u128 << i))
        })
        .collect();
    let needed = (kp / 2) * base;
    let found = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .map(|(a, b)| (vertices[a] ^ vertices[b]).count_ones() as usize)
        .min()
        .unwrap_or(usize::MAX);
    if found < needed || 2 * found <= n {
        return Err(Error::SpreadTooSmall {
            needed: needed.max(n / 2 + 1),
            found,
        });
    }
    Ok(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matrices() {
        assert_eq!(sylvester_hadamard(0).entries, vec![1]);
        assert_eq!(sylvester_hadamard(1).entries, vec![1, 1, 1, -1]);
        for t in 0..5 {
            assert!(sylvester_hadamard(t).columns_orthogonal());
        }
    }

    #[test]
    fn too_few_coordinates_is_rejected() {
        assert!(hadamard_spread_vertices(4, 8).is_err());
    }
}
