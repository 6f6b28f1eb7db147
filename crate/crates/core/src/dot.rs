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

//! Graphviz export. Colours cycle through a fixed palette; the integer
//! colour is also written as the edge label.

use std::fmt::Write;

use crate::colouring::EdgeColouring;
use crate::graph::Graph;

pub const PALETTE: [&str; 12] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62",
    "#8da0cb", "#e7298a",
];

pub fn to_dot(g: &Graph, colouring: Option<&EdgeColouring>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        match colouring {
            Some(c) => {
                let col = c.colour(id);
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=\"{}\", label=\"{col}\", penwidth=2];",
                    PALETTE[col % PALETTE.len()]
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn palette_wraps() {
        let g = Arc::new(crate::generators::complete(6).unwrap());
        let dot = to_dot(&g, Some(&EdgeColouring::rainbow(g.clone())));
        assert!(dot.contains("0 -- 1 [color=\"#e41a1c\", label=\"0\""));
        assert!(dot.contains("label=\"12\""));
        assert_eq!(dot.matches("#e41a1c").count(), 2);
    }
}
