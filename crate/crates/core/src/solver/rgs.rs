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

//! Colourings up to renaming of colours, as restricted growth strings: the
//! first edge gets colour 0 and every later edge a colour at most one above
//! the largest used so far.

use std::ops::ControlFlow;

/// Stirling number of the second kind `S(n, k)`, saturating.
pub fn stirling2(n: usize, k: usize) -> u128 {
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = (j as u128).saturating_mul(row[j]).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

/// Visits every restricted growth string of length `e` using exactly `r`
/// colours, in lexicographic order.
pub fn for_each_canonical_colouring<F>(e: usize, r: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if r > e || (r == 0 && e > 0) {
        return ControlFlow::Continue(());
    }
    let mut colours = vec![0; e];
    fn go<F: FnMut(&[usize]) -> ControlFlow<()>>(
        colours: &mut [usize],
        i: usize,
        used: usize,
        r: usize,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let e = colours.len();
        if i == e {
            return if used == r {
                visit(colours)
            } else {
                ControlFlow::Continue(())
            };
        }
        let lowest = if r - used == e - i { used } else { 0 };
        for c in lowest..=used.min(r - 1) {
            colours[i] = c;
            go(colours, i + 1, used.max(c + 1), r, visit)?;
        }
        ControlFlow::Continue(())
    }
    go(&mut colours, 0, 0, r, &mut visit)
}

/// Number of canonical colourings, by enumeration.
pub fn count_canonical_colourings(e: usize, r: usize) -> u128 {
    let mut n = 0u128;
    let _ = for_each_canonical_colouring(e, r, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(5, 3), 25);
        assert_eq!(count_canonical_colourings(4, 2), 7);
        assert_eq!(count_canonical_colourings(0, 0), 1);
    }

    #[test]
    fn lexicographic_order() {
        let mut seen = Vec::new();
        let _ = for_each_canonical_colouring(3, 2, |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1]]);
    }
}
