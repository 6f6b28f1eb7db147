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

use crate::graph::Graph;

/// One block: a maximal 2-connected subgraph, a bridge, or an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Edge ids, ascending. Empty for an isolated vertex.
    pub edges: Vec<usize>,
    /// Vertex ids, ascending.
    pub vertices: Vec<usize>,
}

impl Block {
    pub fn is_isolated_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// True for blocks that contain a cycle.
    pub fn is_two_connected(&self) -> bool {
        self.edges.len() >= 2
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge blocks ordered by smallest edge id, then isolated vertices by id.
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Block-cut tree as `(block index, cut vertex)` incidences.
    pub tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Index of the block containing edge `e`.
    pub fn block_of_edge(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.edges.binary_search(&e).is_ok())
    }

    pub fn blocks_containing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .filter(move |(_, b)| b.contains_vertex(v))
            .map(|(i, _)| i)
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }
}

const UNSEEN: usize = usize::MAX;

struct Frame {
    v: usize,
    parent_edge: usize,
    next: usize,
}

/// Hopcroft–Tarjan lowpoint decomposition, iterative.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut edge_blocks: Vec<Vec<usize>> = Vec::new();
    let mut isolated = Vec::new();
    let mut frames: Vec<Frame> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push(Frame {
            v: root,
            parent_edge: UNSEEN,
            next: 0,
        });
        while let Some(frame) = frames.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let (w, e) = g.neighbours(v)[frame.next];
                frame.next += 1;
                if e == frame.parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push(Frame {
                        v: w,
                        parent_edge: e,
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let done = frames.pop().expect("frame present");
                if let Some(parent) = frames.last() {
                    let u = parent.v;
                    low[u] = low[u].min(low[done.v]);
                    if low[done.v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == done.parent_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        edge_blocks.push(block);
                    }
                }
            }
        }
    }

    edge_blocks.sort_by_key(|b| b[0]);
    let mut blocks: Vec<Block> = edge_blocks
        .into_iter()
        .map(|edges| {
            let mut vertices: Vec<usize> = edges
                .iter()
                .flat_map(|&e| {
                    let (a, b) = g.edge(e);
                    [a, b]
                })
                .collect();
            vertices.sort_unstable();
            vertices.dedup();
            Block { edges, vertices }
        })
        .collect();
    blocks.extend(isolated.into_iter().map(|v| Block {
        edges: Vec::new(),
        vertices: vec![v],
    }));

    let mut membership = vec![0usize; n];
    for b in &blocks {
        for &v in &b.vertices {
            membership[v] += 1;
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| membership[v] >= 2).collect();
    let mut tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if membership[v] >= 2 {
                tree.push((i, v));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices,
        tree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_has_two_blocks() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.tree, vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn isolated_vertices_are_blocks() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert!(d.blocks[0].is_bridge());
        assert!(d.blocks[1].is_isolated_vertex());
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn path_is_all_bridges() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks.len(), 3);
        assert!(d.blocks.iter().all(Block::is_bridge));
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }
}
