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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    /// A search ran out of nodes before it could answer exactly.
    #[error("search budget of {limit} nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    /// Some set of `k` vertices lies on no cycle at all.
    #[error("graph is not in F_{k}: some {k} vertices lie on no common cycle")]
    NotInFamily { k: usize },

    #[error("graph is a cycle")]
    IsCycle,

    #[error("graph is minimally 2-connected")]
    MinimallyTwoConnected,

    #[error("graph is not minimally 2-connected")]
    NotMinimallyTwoConnected,

    /// A constructor's output failed its own verification.
    #[error("{construction} rejected for k={k}: vertex set {bad_set:?} lies on no rainbow structure")]
    ConstructionRejected {
        construction: String,
        k: usize,
        bad_set: Vec<usize>,
    },

    #[error("regime unsupported: {0}")]
    RegimeUnsupported(String),

    #[error("no verified colouring after {attempts} attempts")]
    AttemptsExhausted { attempts: usize },

    #[error("Hamming spread too small: need distance > {needed}, found {found}")]
    SpreadTooSmall { needed: usize, found: usize },

    #[error("no subdivided closed walk exists")]
    WalkNotFound,

    #[error("base cube walk search failed for tuple {tuple:?}")]
    BaseWalkNotFound { tuple: Vec<usize> },

    /// The solver refuses instances outside its default envelope unless forced.
    #[error("instance outside solver scope: {0}")]
    OutOfScope(String),

    #[error("document error: {0}")]
    Document(String),

    /// An independent re-check disagreed with a computed result.
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
