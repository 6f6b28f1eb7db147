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

//! Construction, verification and exact computation of k-rainbow cycle
//! colourings.
//!
//! A colouring of the edges of `G` is a *k-rainbow cycle colouring* when any
//! `k` vertices lie on a common cycle whose edges have distinct colours;
//! `crx_k(G)` is the least number of colours such a colouring needs. The
//! crate provides graph structure ([`structure`]), generators for the named
//! families ([`generators`]), explicit colourings ([`constructions`]),
//! exact rainbow searches and verifiers ([`search`]) and an exhaustive
//! solver with lower-bound certificates ([`solver`]).

pub mod budget;
pub mod colouring;
pub mod constructions;
pub(crate) mod cycles;
pub mod document;
pub mod dot;
pub mod error;
pub mod generators;
pub mod graph;
pub mod search;
pub mod solver;
pub mod structure;
pub mod subsets;

pub use budget::Budget;
pub use colouring::EdgeColouring;
pub use error::{Error, Result};
pub use graph::Graph;
