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

//! Structural algorithms: blocks, connectivity, ears, cycle invariants and
//! membership in the families F_k.

pub mod blocks;
pub mod connectivity;
pub mod ears;
pub mod family;
pub mod invariants;

pub use blocks::{block_decomposition, Block, BlockDecomposition};
pub use connectivity::{is_k_connected, is_minimally_2_connected, is_two_connected};
pub use ears::{ear_decomposition, EarDecomposition};
pub use family::{every_vertex_on_cycle, in_family_fk, in_family_fk_within};
pub use invariants::{
    circumference, girth, graph_invariants, hamilton_cycle, is_hamiltonian, is_hypohamiltonian, GraphInvariants,
    InvariantsBudgetExceeded, PartialInvariants,
};
