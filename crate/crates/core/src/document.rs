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

//! JSON graph documents.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "n": 4,
//!   "edges": [[0, 1], [0, 3], [1, 2], [2, 3]],
//!   "colouring": { "colours": [0, 1, 2, 3], "r": 4 },
//!   "metadata": { "family": "cycle", "params": { "n": 4 } }
//! }
//! ```
//!
//! Edge `i` of the document is edge id `i`, so edges must be listed as
//! `[u, v]` with `u < v` in lexicographic order, the order [`Graph`] uses.
//! `colouring` and `metadata` are optional.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::Graph;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub format_version: u32,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colouring: Option<ColouringSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColouringSection {
    pub colours: Vec<usize>,
    pub r: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Construction that produced the colouring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

fn doc_error(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            format_version: FORMAT_VERSION,
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            colouring: None,
            metadata: None,
        }
    }

    pub fn from_family(f: &Family) -> Result<Self> {
        let mut doc = Self::from_graph(&f.graph()?);
        doc.metadata = Some(Metadata {
            family: Some(f.name().to_string()),
            params: f.params(),
            ..Metadata::default()
        });
        Ok(doc)
    }

    pub fn set_colouring(&mut self, c: &EdgeColouring) {
        self.colouring = Some(ColouringSection {
            colours: c.colours().to_vec(),
            r: c.r(),
        });
    }

    pub fn metadata_mut(&mut self) -> &mut Metadata {
        self.metadata.get_or_insert_with(Metadata::default)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text).map_err(|e| doc_error(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(doc_error(format!(
                "unsupported format_version {}, expected {FORMAT_VERSION}",
                doc.format_version
            )));
        }
        doc.graph()?;
        doc.colouring()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialise")
    }

    pub fn graph(&self) -> Result<Graph> {
        let g = Graph::new(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        let canonical = self.edges.iter().zip(g.edges()).all(|(&[u, v], &e)| (u, v) == e);
        if !canonical {
            return Err(doc_error("edges must be [u, v] with u < v, sorted lexicographically"));
        }
        Ok(g)
    }

    /// The colouring, if present. Unused colours are tolerated.
    pub fn colouring(&self) -> Result<Option<EdgeColouring>> {
        let Some(c) = &self.colouring else {
            return Ok(None);
        };
        let g = Arc::new(self.graph()?);
        Ok(Some(EdgeColouring::lenient(g, c.colours.clone(), c.r)?))
    }

    /// The family recorded in the metadata, checked against the edges.
    pub fn family(&self) -> Result<Option<Family>> {
        let Some(Metadata {
            family: Some(name),
            params,
            ..
        }) = &self.metadata
        else {
            return Ok(None);
        };
        let f = Family::from_params(name, params)?;
        if f.graph()? != self.graph()? {
            return Err(doc_error(format!("edges do not match the recorded family `{name}`")));
        }
        Ok(Some(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut doc = GraphDocument::from_family(&Family::Wheel { n: 4 }).unwrap();
        doc.set_colouring(&EdgeColouring::rainbow(Arc::new(doc.graph().unwrap())));
        doc.metadata_mut().seed = Some(7);
        assert_eq!(GraphDocument::parse(&doc.to_json()).unwrap(), doc);
        assert_eq!(doc.family().unwrap(), Some(Family::Wheel { n: 4 }));
    }

    #[test]
    fn rejects_unsorted_edges() {
        let text = r#"{"format_version":1,"n":3,"edges":[[1,2],[0,1],[0,2]]}"#;
        assert!(matches!(GraphDocument::parse(text), Err(Error::Document(_))));
    }

    #[test]
    fn rejects_unknown_fields_and_versions() {
        assert!(GraphDocument::parse(r#"{"format_version":1,"n":1,"edges":[],"extra":0}"#).is_err());
        assert!(GraphDocument::parse(r#"{"format_version":2,"n":1,"edges":[]}"#).is_err());
    }
}
