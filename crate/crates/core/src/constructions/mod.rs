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

//! Explicit colourings with their lower-bound obstructions.
//!
//! Every `colour_*` function checks its own output with the exhaustive
//! verifier before returning it and reports a failure as
//! [`Error::ConstructionRejected`]. The unchecked builders live in [`raw`]
//! for instances too large to verify.

mod bipartite;
mod complete;
mod cube;
mod obstruction;
mod random;
mod save_one;
mod wheel;

use std::sync::Arc;

use crate::colouring::EdgeColouring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring, VerifyOptions};

pub use bipartite::{colour_bipartite, colour_bipartite_with, BipartiteScheme};
pub use complete::{colour_complete_2rainbow, colour_multipartite_blowup};
pub use cube::{
    colour_cube, colour_cube_recursive, cube_colour_budget, CubePlan, RecursiveCubeColouring, WalkRoute, WalkSample,
};
pub use obstruction::{
    every_cycle_through_uses, hamilton_cycles, minimal_2conn_obstruction, petersen_pair_obstruction,
};
pub use random::{colour_balanced_multipartite_random, colour_complete_random, SampledColouring};
pub use save_one::{colour_join_rxk, colour_save_one_crx1, colour_save_one_crx2};
pub use wheel::colour_wheel;

/// Builders that skip self-verification.
pub mod raw {
    pub use super::bipartite::bipartite_colouring;
    pub use super::complete::{complete_2rainbow_colouring, multipartite_blowup_colouring};
    pub use super::cube::cube_colouring;
    pub use super::save_one::{join_rxk_colouring, save_one_crx1_colouring, save_one_crx2_colouring};
    pub use super::wheel::wheel_colouring;
}

/// Strict colouring from a colour vector that must use exactly `0..r`.
fn build(g: Graph, colours: Vec<usize>, r: usize) -> Result<EdgeColouring> {
    EdgeColouring::new(Arc::new(g), colours, r)
}

fn certify(c: EdgeColouring, k: usize, construction: &str) -> Result<EdgeColouring> {
    let report = verify_k_rainbow_cycle_colouring(&c, k, &VerifyOptions::parallel())?;
    match report.bad_set {
        None => Ok(c),
        Some(bad_set) => Err(Error::ConstructionRejected {
            construction: construction.into(),
            k,
            bad_set,
        }),
    }
}

fn certify_index(c: EdgeColouring, k: usize, construction: &str) -> Result<EdgeColouring> {
    let report = verify_k_rainbow_index_colouring(&c, k, &VerifyOptions::parallel())?;
    match report.bad_set {
        None => Ok(c),
        Some(bad_set) => Err(Error::ConstructionRejected {
            construction: construction.into(),
            k,
            bad_set,
        }),
    }
}

fn unsupported(msg: String) -> Error {
    Error::RegimeUnsupported(msg)
}
