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

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A total map from edge ids to colours `0..r`.
///
/// Constructors require every declared colour to appear unless the
/// colouring is built with [`EdgeColouring::lenient`], which flags it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColouring {
    graph: Arc<Graph>,
    colours: Vec<usize>,
    r: usize,
    allows_unused: bool,
}

impl EdgeColouring {
    /// Strict constructor: one colour per edge, every colour in `0..r` used.
    pub fn new(graph: Arc<Graph>, colours: Vec<usize>, r: usize) -> Result<Self> {
        let c = Self::lenient(graph, colours, r)?;
        if let Some(missing) = c.unused_colours().first() {
            return Err(Error::InvalidColouring(format!(
                "colour {missing} of 0..{r} is never used"
            )));
        }
        Ok(EdgeColouring {
            allows_unused: false,
            ..c
        })
    }

    /// Like [`EdgeColouring::new`] but unused colours are allowed.
    pub fn lenient(graph: Arc<Graph>, colours: Vec<usize>, r: usize) -> Result<Self> {
        if colours.len() != graph.edge_count() {
            return Err(Error::InvalidColouring(format!(
                "{} colours given for {} edges",
                colours.len(),
                graph.edge_count()
            )));
        }
        if let Some((e, &c)) = colours.iter().enumerate().find(|(_, &c)| c >= r) {
            return Err(Error::InvalidColouring(format!(
                "edge {e} has colour {c}, outside 0..{r}"
            )));
        }
        Ok(EdgeColouring {
            graph,
            colours,
            r,
            allows_unused: true,
        })
    }

    /// Compacts the colours actually used to `0..r'` in order of first use.
    pub fn from_raw(graph: Arc<Graph>, raw: &[usize]) -> Result<Self> {
        let mut map = std::collections::HashMap::new();
        let colours: Vec<usize> = raw
            .iter()
            .map(|&c| {
                let next = map.len();
                *map.entry(c).or_insert(next)
            })
            .collect();
        let r = map.len();
        Self::new(graph, colours, r)
    }

    /// Every edge a distinct colour.
    pub fn rainbow(graph: Arc<Graph>) -> Self {
        let e = graph.edge_count();
        EdgeColouring {
            graph,
            colours: (0..e).collect(),
            r: e,
            allows_unused: false,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    #[inline]
    pub fn colour(&self, edge: usize) -> usize {
        self.colours[edge]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// Declared colour count.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn allows_unused(&self) -> bool {
        self.allows_unused
    }

    /// Number of distinct colours that actually occur.
    pub fn used_count(&self) -> usize {
        self.r - self.unused_colours().len()
    }

    pub fn unused_colours(&self) -> Vec<usize> {
        let mut seen = vec![false; self.r];
        for &c in &self.colours {
            seen[c] = true;
        }
        (0..self.r).filter(|&c| !seen[c]).collect()
    }

    /// Edges per colour.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.r];
        for &c in &self.colours {
            sizes[c] += 1;
        }
        sizes
    }

    /// Applies a colour bijection `perm[old] = new` on `0..r`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let mut hit = vec![false; self.r];
        if perm.len() != self.r
            || perm
                .iter()
                .any(|&p| p >= self.r || std::mem::replace(&mut hit[p], true))
        {
            return Err(Error::InvalidParameter("not a permutation of the colours".into()));
        }
        Ok(EdgeColouring {
            colours: self.colours.iter().map(|&c| perm[c]).collect(),
            ..self.clone()
        })
    }

    pub fn is_rainbow_edges(&self, edges: &[usize]) -> bool {
        let mut seen = vec![false; self.r];
        edges
            .iter()
            .all(|&e| !std::mem::replace(&mut seen[self.colours[e]], true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn strict_rejects_unused() {
        let g = Arc::new(cycle(4).unwrap());
        assert!(EdgeColouring::new(g.clone(), vec![0, 1, 0, 1], 3).is_err());
        let c = EdgeColouring::lenient(g.clone(), vec![0, 1, 0, 1], 3).unwrap();
        assert_eq!(c.unused_colours(), vec![2]);
        assert!(EdgeColouring::new(g, vec![0, 1, 0, 3], 3).is_err());
    }

    #[test]
    fn from_raw_compacts() {
        let g = Arc::new(cycle(4).unwrap());
        let c = EdgeColouring::from_raw(g, &[7, 3, 7, 9]).unwrap();
        assert_eq!(c.colours(), &[0, 1, 0, 2]);
        assert_eq!(c.r(), 3);
    }
}
