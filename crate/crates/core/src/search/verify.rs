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

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::colouring::EdgeColouring;
use crate::cycles::CycleQuery;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{every_vertex_on_cycle, is_two_connected};
use crate::subsets::Combinations;

use super::tree::rainbow_tree_through;

/// Knobs shared by both verifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Search nodes allowed for each individual k-set.
    pub nodes_per_set: u64,
    pub parallel: bool,
    /// Sets handed to the thread pool at a time in parallel mode.
    pub chunk: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            nodes_per_set: Budget::DEFAULT_LIMIT,
            parallel: false,
            chunk: 4096,
        }
    }
}

impl VerifyOptions {
    pub fn parallel() -> Self {
        VerifyOptions {
            parallel: true,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyStatus {
    Certified,
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub status: VerifyStatus,
    /// First failing k-set in colex order.
    pub bad_set: Option<Vec<usize>>,
    pub subsets_checked: u64,
    /// Search nodes spent on the sets up to the decisive one.
    pub nodes: u64,
}

impl VerificationReport {
    pub fn is_certified(&self) -> bool {
        self.status == VerifyStatus::Certified
    }
}

type SetOutcome = (Result<bool>, u64);

fn run_set<F>(set: &[usize], limit: u64, check: &F) -> SetOutcome
where
    F: Fn(&[usize], &mut Budget) -> Result<bool>,
{
    let mut budget = Budget::new(limit);
    let r = check(set, &mut budget);
    (r, budget.used())
}

/// Walks every k-subset of `0..n` in colex order and stops at the first set
/// for which `check` is false or fails. Parallel mode evaluates a chunk at a
/// time and scans the results in order, so both modes agree exactly.
fn scan_sets<F>(n: usize, k: usize, opts: &VerifyOptions, check: F) -> Result<VerificationReport>
where
    F: Fn(&[usize], &mut Budget) -> Result<bool> + Sync,
{
    let mut checked = 0u64;
    let mut nodes = 0u64;
    let mut decide = |set: Vec<usize>, (res, used): SetOutcome| -> Result<Option<VerificationReport>> {
        checked += 1;
        nodes += used;
        if res? {
            Ok(None)
        } else {
            Ok(Some(VerificationReport {
                status: VerifyStatus::Counterexample,
                bad_set: Some(set),
                subsets_checked: checked,
                nodes,
            }))
        }
    };
    let mut sets = Combinations::new(n, k);
    if opts.parallel {
        let chunk = opts.chunk.max(1);
        loop {
            let batch: Vec<Vec<usize>> = sets.by_ref().take(chunk).collect();
            if batch.is_empty() {
                break;
            }
            let outcomes: Vec<SetOutcome> = batch
                .par_iter()
                .map(|s| run_set(s, opts.nodes_per_set, &check))
                .collect();
            for (set, out) in batch.into_iter().zip(outcomes) {
                if let Some(rep) = decide(set, out)? {
                    return Ok(rep);
                }
            }
        }
    } else {
        for set in sets {
            let out = run_set(&set, opts.nodes_per_set, &check);
            if let Some(rep) = decide(set, out)? {
                return Ok(rep);
            }
        }
    }
    Ok(VerificationReport {
        status: VerifyStatus::Certified,
        bad_set: None,
        subsets_checked: checked,
        nodes,
    })
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k = {k} must lie in 1..={}", g.n())));
    }
    Ok(())
}

/// Decides whether every k-set lies on a common cycle, spending at most
/// `nodes_per_set` search nodes per set.
fn in_family(g: &Graph, k: usize, nodes_per_set: u64) -> Result<bool> {
    let q = CycleQuery::new(g);
    for set in Combinations::new(g.n(), k) {
        if q.find(&set, &mut Budget::new(nodes_per_set))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether every k-subset of vertices lies on a rainbow cycle.
///
/// The graph must have every k-set on some cycle. For `k <= 2` this is
/// checked structurally up front; for larger `k` it is checked only when a
/// set without a rainbow cycle turns up, since a certified answer already
/// implies it.
pub fn verify_k_rainbow_cycle_colouring(
    c: &EdgeColouring,
    k: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let g = c.graph();
    check_k(g, k)?;
    let structural_ok = match k {
        1 => every_vertex_on_cycle(g),
        _ => is_two_connected(g),
    };
    if !structural_ok {
        return Err(Error::NotInFamily { k });
    }
    let report = scan_sets(g.n(), k, opts, |set, budget| {
        Ok(CycleQuery::new(g)
            .coloured(c.colours(), c.r())
            .find(set, budget)?
            .is_some())
    })?;
    if k >= 3 && !report.is_certified() && !in_family(g, k, opts.nodes_per_set)? {
        return Err(Error::NotInFamily { k });
    }
    Ok(report)
}

/// Decides whether every k-subset of vertices is spanned by a rainbow tree.
pub fn verify_k_rainbow_index_colouring(
    c: &EdgeColouring,
    k: usize,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let g = c.graph();
    check_k(g, k)?;
    if !g.is_connected() {
        return Err(Error::InvalidGraph("rainbow trees need a connected graph".into()));
    }
    scan_sets(g.n(), k, opts, |set, budget| {
        Ok(rainbow_tree_through(c, set, budget)?.is_some())
    })
}
