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

/// Splits `Q_n` as `Q_p ⊕ Q_q`: the low `p` coordinates form the first
/// factor, the remaining `q` the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeSplit {
    pub p: usize,
    pub q: usize,
}

impl CubeSplit {
    pub fn new(p: usize, q: usize) -> Self {
        CubeSplit { p, q }
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn hat(&self, v: usize) -> usize {
        v & ((1 << self.p) - 1)
    }

    pub fn tilde(&self, v: usize) -> usize {
        v >> self.p
    }

    pub fn join(&self, hat: usize, tilde: usize) -> usize {
        hat | (tilde << self.p)
    }
}

/// Reflected binary Gray code of `i`.
pub fn gray_code(i: usize) -> usize {
    i ^ (i >> 1)
}
