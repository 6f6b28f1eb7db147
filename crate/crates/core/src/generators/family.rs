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

use std::collections::BTreeMap;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named family member together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    CompleteMultipartite { sizes: Vec<usize> },
    Wheel { n: usize },
    Hypercube { n: usize },
    Petersen,
    PathCycleJoin { k: usize, t: usize },
    Theta { lengths: Vec<usize> },
}

pub const FAMILY_NAMES: [&str; 10] = [
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "wheel",
    "hypercube",
    "petersen",
    "path_cycle_join",
    "theta",
];

fn missing(name: &str, key: &str) -> Error {
    Error::InvalidParameter(format!("{name} needs parameter `{key}`"))
}

fn int(params: &BTreeMap<String, Value>, name: &str, key: &str) -> Result<usize> {
    let v = params.get(key).ok_or_else(|| missing(name, key))?;
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::InvalidParameter(format!("`{key}` must be a non-negative integer")))
}

fn list(params: &BTreeMap<String, Value>, name: &str, key: &str) -> Result<Vec<usize>> {
    let v = params.get(key).ok_or_else(|| missing(name, key))?;
    v.as_array()
        .and_then(|a| a.iter().map(|x| x.as_u64().map(|x| x as usize)).collect())
        .ok_or_else(|| Error::InvalidParameter(format!("`{key}` must be a list of non-negative integers")))
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::CompleteMultipartite { .. } => "complete_multipartite",
            Family::Wheel { .. } => "wheel",
            Family::Hypercube { .. } => "hypercube",
            Family::Petersen => "petersen",
            Family::PathCycleJoin { .. } => "path_cycle_join",
            Family::Theta { .. } => "theta",
        }
    }

    pub fn params(&self) -> BTreeMap<String, Value> {
        let mut p = BTreeMap::new();
        let mut put = |k: &str, v: Value| {
            p.insert(k.to_string(), v);
        };
        match self {
            Family::Cycle { n }
            | Family::Path { n }
            | Family::Complete { n }
            | Family::Wheel { n }
            | Family::Hypercube { n } => put("n", (*n).into()),
            Family::CompleteBipartite { m, n } => {
                put("m", (*m).into());
                put("n", (*n).into());
            }
            Family::CompleteMultipartite { sizes } => put("sizes", sizes.clone().into()),
            Family::Petersen => {}
            Family::PathCycleJoin { k, t } => {
                put("k", (*k).into());
                put("t", (*t).into());
            }
            Family::Theta { lengths } => put("lengths", lengths.clone().into()),
        }
        p
    }

    pub fn from_params(name: &str, params: &BTreeMap<String, Value>) -> Result<Family> {
        Ok(match name {
            "cycle" => Family::Cycle {
                n: int(params, name, "n")?,
            },
            "path" => Family::Path {
                n: int(params, name, "n")?,
            },
            "complete" => Family::Complete {
                n: int(params, name, "n")?,
            },
            "complete_bipartite" => Family::CompleteBipartite {
                m: int(params, name, "m")?,
                n: int(params, name, "n")?,
            },
            "complete_multipartite" => Family::CompleteMultipartite {
                sizes: list(params, name, "sizes")?,
            },
            "wheel" => Family::Wheel {
                n: int(params, name, "n")?,
            },
            "hypercube" => Family::Hypercube {
                n: int(params, name, "n")?,
            },
            "petersen" => Family::Petersen,
            "path_cycle_join" => Family::PathCycleJoin {
                k: int(params, name, "k")?,
                t: int(params, name, "t")?,
            },
            "theta" => Family::Theta {
                lengths: list(params, name, "lengths")?,
            },
            other => return Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        match self {
            Family::Cycle { n } => super::cycle(*n),
            Family::Path { n } => super::path(*n),
            Family::Complete { n } => super::complete(*n),
            Family::CompleteBipartite { m, n } => super::complete_bipartite(*m, *n),
            Family::CompleteMultipartite { sizes } => super::complete_multipartite(sizes),
            Family::Wheel { n } => super::wheel(*n),
            Family::Hypercube { n } => super::hypercube(*n),
            Family::Petersen => Ok(super::petersen()),
            Family::PathCycleJoin { k, t } => super::path_cycle_join(*k, *t),
            Family::Theta { lengths } => super::theta(lengths),
        }
    }

    /// The family member whose standard labelling produces exactly `g`
    /// (same vertex count and edge list in the same order), if any. Paths
    /// and theta graphs are not recognised.
    pub fn recognise(g: &Graph) -> Option<Family> {
        let (n, e) = (g.n(), g.edge_count());
        let mut candidates = Vec::new();
        if n >= 3 && e == n {
            candidates.push(Family::Cycle { n });
        }
        if e == n * n.saturating_sub(1) / 2 {
            candidates.push(Family::Complete { n });
        }
        if n >= 4 && e == 2 * (n - 1) {
            candidates.push(Family::Wheel { n: n - 1 });
        }
        if n.is_power_of_two() && n >= 2 {
            let d = n.trailing_zeros() as usize;
            if e == d * n / 2 {
                candidates.push(Family::Hypercube { n: d });
            }
        }
        if n == 10 && e == 15 {
            candidates.push(Family::Petersen);
        }
        for m in 1..=n / 2 {
            if m * (n - m) == e {
                candidates.push(Family::CompleteBipartite { m, n: n - m });
            }
        }
        candidates.into_iter().find(|f| f.graph().is_ok_and(|h| h == *g))
    }
}
