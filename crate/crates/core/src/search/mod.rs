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

//! Rainbow searches and the k-set verifiers built on them.

mod collision;
mod cycle;
mod tree;
mod verify;
mod walk;
mod witness;

pub use collision::{colour_class_collision, colour_set_collision};
pub use cycle::{cycle_through, min_cycle_length_through, rainbow_cycle_through, shortest_cycle_through};
pub use tree::rainbow_tree_through;
pub use verify::{
    verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring, VerificationReport, VerifyOptions, VerifyStatus,
};
pub use walk::find_subdivided_closed_walk;
pub use witness::{CycleWitness, TreeWitness, WalkWitness};
