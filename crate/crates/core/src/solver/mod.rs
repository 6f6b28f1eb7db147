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

//! Exact values and bound intervals for `crx_k` and `rx_k`.
//!
//! [`crx_exact`] and [`rx_exact`] walk colour counts upward, enumerating
//! colourings up to renaming of colours ([`rgs`]). Every colour count below
//! the answer carries [`Evidence`]: either an exhaustion record or a
//! [`Certificate`] that can be rechecked on its own. [`crx_interval`]
//! skips enumeration and pairs the best construction with the best
//! certificate.

pub mod certificate;
mod index;
pub mod rgs;

use std::ops::ControlFlow;
use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use crate::budget::Budget;
use crate::colouring::EdgeColouring;
use crate::constructions::{
    colour_bipartite, colour_complete_2rainbow, colour_complete_random, colour_cube, colour_multipartite_blowup,
    colour_save_one_crx1, colour_save_one_crx2, colour_wheel, minimal_2conn_obstruction, petersen_pair_obstruction,
};
use crate::error::{Error, Result};
use crate::generators::Family;
use crate::graph::Graph;
use crate::search::{
    min_cycle_length_through, verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring, VerifyOptions,
};
use crate::structure::{hamilton_cycle, in_family_fk_within, is_minimally_2_connected};
use crate::subsets::{binomial, Combinations};

pub use certificate::{Certificate, CollisionRule, ForcedPair, Objective};
pub use rgs::{count_canonical_colourings, for_each_canonical_colouring, stirling2};

use index::CycleIndex;

/// Largest edge count enumerated without `force`.
pub const SCOPE_MAX_EDGES: usize = 16;
/// Largest number of k-sets enumerated without `force`.
pub const SCOPE_MAX_SETS: u128 = 100_000;
/// Colour masks are 64-bit words.
pub const HARD_MAX_EDGES: usize = 64;

/// Where enumeration starts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartPolicy {
    /// At one colour, so every smaller count carries an exhaustion record.
    #[default]
    Exhaustive,
    /// At the best distance bound found within the budget.
    DistanceBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Total search nodes.
    pub budget: u64,
    /// Lift the edge and subset scope guard (not the 64-edge limit).
    pub force: bool,
    pub start: StartPolicy,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: 100_000_000,
            force: false,
            start: StartPolicy::Exhaustive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultKind {
    Exact,
    Interval,
    /// Membership in F_k could not be settled within the budget.
    Unknown,
}

/// A certificate that rules out every colour count in `from..=to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub from: usize,
    pub to: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrxResult {
    pub objective: Objective,
    pub kind: ResultKind,
    pub lower: usize,
    pub upper: usize,
    /// A colouring with `upper` colours.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<EdgeColouring>,
    pub evidence: Vec<Evidence>,
    pub nodes: u64,
}

fn serialize_witness<S: Serializer>(w: &Option<EdgeColouring>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Witness<'a> {
        colours: &'a [usize],
        r: usize,
    }
    w.as_ref()
        .map(|c| Witness {
            colours: c.colours(),
            r: c.r(),
        })
        .serialize(s)
}

impl CrxResult {
    pub fn value(&self) -> Option<usize> {
        (self.kind == ResultKind::Exact).then_some(self.lower)
    }

    /// Rechecks the witness and every piece of evidence from scratch.
    pub fn check(&self, g: &Graph, k: usize) -> Result<()> {
        let bad = |m: String| Err(Error::Inconsistent(m));
        if self.lower > self.upper {
            return bad(format!("lower {} exceeds upper {}", self.lower, self.upper));
        }
        if self.kind == ResultKind::Exact && self.lower != self.upper {
            return bad("exact result with distinct bounds".into());
        }
        if let Some(w) = &self.witness {
            if w.graph() != g || w.r() != self.upper {
                return bad(format!("witness uses {} colours, upper is {}", w.r(), self.upper));
            }
            if !witness_works(w, k, self.objective)? {
                return bad("witness does not verify".into());
            }
        }
        let mut covered = vec![false; self.lower];
        for ev in &self.evidence {
            if ev.certificate.lower_bound() <= ev.to {
                return bad(format!(
                    "{} certificate does not reach {}",
                    ev.certificate.name(),
                    ev.to
                ));
            }
            ev.certificate.check(g, k)?;
            for r in ev.from..=ev.to.min(self.lower.saturating_sub(1)) {
                covered[r] = true;
            }
        }
        let first = match self.objective {
            Objective::Cycles => 1,
            Objective::Trees => 1.min(self.lower),
        };
        if let Some(r) = (first..self.lower).find(|&r| !covered[r]) {
            return bad(format!("no evidence for {r} colours"));
        }
        Ok(())
    }
}

fn witness_works(w: &EdgeColouring, k: usize, objective: Objective) -> Result<bool> {
    let opts = VerifyOptions {
        nodes_per_set: u64::MAX,
        ..VerifyOptions::parallel()
    };
    Ok(match objective {
        Objective::Cycles => verify_k_rainbow_cycle_colouring(w, k, &opts)?.is_certified(),
        Objective::Trees => verify_k_rainbow_index_colouring(w, k, &opts)?.is_certified(),
    })
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!("k must be in 1..={}, got {k}", g.n())));
    }
    Ok(())
}

fn check_scope(g: &Graph, k: usize, force: bool) -> Result<()> {
    let e = g.edge_count();
    if e > HARD_MAX_EDGES {
        return Err(Error::OutOfScope(format!(
            "{e} edges; enumeration handles at most {HARD_MAX_EDGES}"
        )));
    }
    let sets = binomial(g.n(), k);
    if !force && (e > SCOPE_MAX_EDGES || sets > SCOPE_MAX_SETS) {
        return Err(Error::OutOfScope(format!(
            "{e} edges and {sets} vertex sets exceed the default scope ({SCOPE_MAX_EDGES} edges, {SCOPE_MAX_SETS} sets)"
        )));
    }
    Ok(())
}

fn is_budget(e: &Error) -> bool {
    matches!(e, Error::BudgetExceeded { .. })
}

fn interval_after_budget(
    objective: Objective,
    lower: usize,
    witness: EdgeColouring,
    evidence: Vec<Evidence>,
    nodes: u64,
) -> CrxResult {
    CrxResult {
        objective,
        kind: ResultKind::Interval,
        lower,
        upper: witness.r(),
        witness: Some(witness),
        evidence,
        nodes,
    }
}

/// The least number of colours in a k-rainbow cycle colouring of `g`.
///
/// Runs out of budget into an interval whose upper end is the rainbow
/// colouring.
pub fn crx_exact(g: &Graph, k: usize, opts: &SolveOptions) -> Result<CrxResult> {
    check_k(g, k)?;
    check_scope(g, k, opts.force)?;
    let mut budget = Budget::new(opts.budget);
    if !in_family_fk_within(g, k, &mut budget)? {
        return Err(Error::NotInFamily { k });
    }
    let arc = Arc::new(g.clone());
    let e = g.edge_count();
    let first: Vec<usize> = (0..k).collect();
    let mut bound = DistanceBound {
        bound: min_cycle_length_through(g, &first, &mut budget)?.ok_or(Error::NotInFamily { k })?,
        set: first,
        exhaustive: false,
        sets_checked: 1,
    };
    let start = match opts.start {
        StartPolicy::Exhaustive => 1,
        StartPolicy::DistanceBound => {
            let mut sub = Budget::new(budget.remaining());
            if let Ok(b) = crx_lower_bound_distance(g, k, &mut sub) {
                bound = b;
            }
            budget.charge(sub.used())?;
            bound.bound
        }
    };
    let mut evidence = Vec::new();
    if start > 1 {
        evidence.push(Evidence {
            from: 1,
            to: start - 1,
            certificate: bound.certificate(),
        });
    }
    let rainbow = EdgeColouring::rainbow(arc.clone());
    let index = match CycleIndex::build(g, k, &mut budget) {
        Ok(ix) => ix,
        Err(err) if is_budget(&err) => {
            return Ok(interval_after_budget(
                Objective::Cycles,
                start,
                rainbow,
                evidence,
                budget.used(),
            ))
        }
        Err(err) => return Err(err),
    };
    for r in start..=e {
        let before = budget.used();
        match index.search(r, &mut budget) {
            Ok(Some(colours)) => {
                let witness = EdgeColouring::new(arc, colours, r)?;
                if !witness_works(&witness, k, Objective::Cycles)? {
                    return Err(Error::Inconsistent(format!(
                        "enumerated {r}-colouring fails verification"
                    )));
                }
                return Ok(CrxResult {
                    objective: Objective::Cycles,
                    kind: ResultKind::Exact,
                    lower: r,
                    upper: r,
                    witness: Some(witness),
                    evidence,
                    nodes: budget.used(),
                });
            }
            Ok(None) => evidence.push(Evidence {
                from: r,
                to: r,
                certificate: Certificate::Exhaustion {
                    objective: Objective::Cycles,
                    r,
                    colourings: u64::try_from(stirling2(e, r)).unwrap_or(u64::MAX),
                    nodes: budget.used() - before,
                },
            }),
            Err(err) if is_budget(&err) => {
                return Ok(interval_after_budget(
                    Objective::Cycles,
                    r,
                    rainbow,
                    evidence,
                    budget.used(),
                ))
            }
            Err(err) => return Err(err),
        }
    }
    Err(Error::Inconsistent("the rainbow colouring failed".into()))
}

/// First canonical `r`-colouring that is a k-rainbow index colouring.
pub(crate) fn tree_search(g: &Graph, k: usize, r: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let arc = Arc::new(g.clone());
    let mut found = None;
    let mut failure = None;
    let _ = for_each_canonical_colouring(g.edge_count(), r, |colours| {
        let step = budget.tick().and_then(|()| {
            let c = EdgeColouring::new(arc.clone(), colours.to_vec(), r)?;
            let opts = VerifyOptions {
                nodes_per_set: budget.remaining().max(1),
                ..VerifyOptions::default()
            };
            let report = verify_k_rainbow_index_colouring(&c, k, &opts)?;
            budget.charge(report.nodes)?;
            Ok(report.is_certified())
        });
        match step {
            Ok(true) => {
                found = Some(colours.to_vec());
                ControlFlow::Break(())
            }
            Ok(false) => ControlFlow::Continue(()),
            Err(e) => {
                failure = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// The least number of colours in a k-rainbow index colouring of a
/// connected `g`; `rx_1 = 0`.
pub fn rx_exact(g: &Graph, k: usize, opts: &SolveOptions) -> Result<CrxResult> {
    check_k(g, k)?;
    check_scope(g, k, opts.force)?;
    if !g.is_connected() {
        return Err(Error::InvalidGraph("rainbow trees need a connected graph".into()));
    }
    let mut result = CrxResult {
        objective: Objective::Trees,
        kind: ResultKind::Exact,
        lower: 0,
        upper: 0,
        witness: None,
        evidence: Vec::new(),
        nodes: 0,
    };
    if k == 1 {
        return Ok(result);
    }
    let arc = Arc::new(g.clone());
    let mut budget = Budget::new(opts.budget);
    for r in 1..=g.edge_count() {
        let before = budget.used();
        match tree_search(g, k, r, &mut budget) {
            Ok(Some(colours)) => {
                result.lower = r;
                result.upper = r;
                result.witness = Some(EdgeColouring::new(arc, colours, r)?);
                result.nodes = budget.used();
                return Ok(result);
            }
            Ok(None) => result.evidence.push(Evidence {
                from: r,
                to: r,
                certificate: Certificate::Exhaustion {
                    objective: Objective::Trees,
                    r,
                    colourings: u64::try_from(stirling2(g.edge_count(), r)).unwrap_or(u64::MAX),
                    nodes: budget.used() - before,
                },
            }),
            Err(err) if is_budget(&err) => {
                let rainbow = EdgeColouring::rainbow(arc);
                return Ok(interval_after_budget(
                    Objective::Trees,
                    r,
                    rainbow,
                    result.evidence,
                    budget.used(),
                ));
            }
            Err(err) => return Err(err),
        }
    }
    Err(Error::Inconsistent("the rainbow colouring failed".into()))
}

/// Best distance lower bound found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub bound: usize,
    /// A k-set whose shortest cycle has length `bound`.
    pub set: Vec<usize>,
    /// Every k-set was examined.
    pub exhaustive: bool,
    pub sets_checked: u64,
}

impl DistanceBound {
    pub fn certificate(&self) -> Certificate {
        Certificate::DistanceBound {
            set: self.set.clone(),
            length: self.bound,
        }
    }
}

/// Maximises the shortest-cycle length over k-sets. Stops early when the
/// budget runs out; whatever was found is still a valid bound. Ties go to
/// the lexicographically least set.
pub fn crx_lower_bound_distance(g: &Graph, k: usize, budget: &mut Budget) -> Result<DistanceBound> {
    check_k(g, k)?;
    let mut best: Option<DistanceBound> = None;
    let mut checked = 0;
    for set in Combinations::new(g.n(), k) {
        let len = match min_cycle_length_through(g, &set, budget) {
            Ok(Some(len)) => len,
            Ok(None) => return Err(Error::NotInFamily { k }),
            Err(err) if is_budget(&err) && best.is_some() => {
                let mut b = best.expect("checked above");
                b.sets_checked = checked;
                return Ok(b);
            }
            Err(err) => return Err(err),
        };
        checked += 1;
        let better = match &best {
            None => true,
            Some(b) => len > b.bound || (len == b.bound && set < b.set),
        };
        if better {
            best = Some(DistanceBound {
                bound: len,
                set,
                exhaustive: false,
                sets_checked: 0,
            });
        }
    }
    let mut b = best.ok_or_else(|| Error::InvalidParameter("no vertex sets".into()))?;
    b.exhaustive = true;
    b.sets_checked = checked;
    Ok(b)
}

/// Attempts the sampler makes for complete graphs inside [`crx_interval`].
const INTERVAL_SAMPLER_ATTEMPTS: usize = 200;

/// Upper bounds from the family constructions that apply to `g`.
fn family_upper(family: &Family, k: usize) -> Option<EdgeColouring> {
    match family {
        Family::Complete { n } if k <= 2 => colour_complete_2rainbow(*n).ok(),
        Family::Complete { n } => colour_complete_random(*n, k, 0, INTERVAL_SAMPLER_ATTEMPTS)
            .ok()
            .map(|s| s.colouring),
        Family::Wheel { n } => colour_wheel(*n, k).ok(),
        Family::Hypercube { n } => colour_cube(*n, k).ok(),
        Family::CompleteBipartite { m, n } => colour_bipartite(*m, *n, k).ok(),
        Family::CompleteMultipartite { sizes } if k == 1 => colour_multipartite_blowup(sizes).ok(),
        _ => None,
    }
}

/// A rainbow Hamilton cycle: every other edge takes colour 0.
fn hamilton_upper(g: &Graph) -> Option<EdgeColouring> {
    let cycle = hamilton_cycle(g, &mut Budget::new(1_000_000)).ok()??;
    let edges = g.cycle_edges(&cycle)?;
    let mut colours = vec![0; g.edge_count()];
    for (i, &e) in edges.iter().enumerate() {
        colours[e] = i;
    }
    EdgeColouring::new(Arc::new(g.clone()), colours, g.n()).ok()
}

fn collision_rules(family: &Family, k: usize) -> Vec<CollisionRule> {
    let Family::CompleteBipartite { m, n } = *family else {
        return Vec::new();
    };
    let mut rules = Vec::new();
    if m == k {
        rules.push(CollisionRule::Star { k, n });
    }
    if m == 3 && k == 2 {
        rules.push(CollisionRule::ColourSets { n });
    }
    rules.push(CollisionRule::Vectors { m, n, k });
    rules
}

/// Obstruction pairs, when every edge must get its own colour.
fn obstruction_pairs(g: &Graph, family: Option<&Family>, k: usize) -> Result<Option<Certificate>> {
    let e = g.edge_count();
    let pick: Box<dyn Fn(usize, usize) -> Result<Vec<usize>>> = match family {
        Some(Family::Petersen) if k == 9 => Box::new(|a, b| {
            let v = petersen_pair_obstruction(a, b)?;
            Ok((0..10).filter(|&x| x != v).collect())
        }),
        _ if k == 2 && e <= 40 && is_minimally_2_connected(g) => Box::new(|a, b| {
            let (u, v) = minimal_2conn_obstruction(g, a, b)?;
            Ok(vec![u, v])
        }),
        _ => return Ok(None),
    };
    let mut entries = Vec::with_capacity(e * e.saturating_sub(1) / 2);
    for a in 0..e {
        for b in a + 1..e {
            entries.push(ForcedPair {
                edges: (a, b),
                set: pick(a, b)?,
            });
        }
    }
    Ok(Some(Certificate::ObstructionPairs { entries, bound: e }))
}

/// Best construction against best certificate, without enumeration.
pub fn crx_interval(g: &Graph, k: usize, opts: &SolveOptions) -> Result<CrxResult> {
    check_k(g, k)?;
    let mut budget = Budget::new(opts.budget);
    let arc = Arc::new(g.clone());
    let rainbow = EdgeColouring::rainbow(arc.clone());
    match in_family_fk_within(g, k, &mut budget) {
        Ok(true) => {}
        Ok(false) => return Err(Error::NotInFamily { k }),
        Err(err) if is_budget(&err) => {
            return Ok(CrxResult {
                objective: Objective::Cycles,
                kind: ResultKind::Unknown,
                lower: 0,
                upper: g.edge_count(),
                witness: None,
                evidence: Vec::new(),
                nodes: budget.used(),
            })
        }
        Err(err) => return Err(err),
    }
    let family = Family::recognise(g);

    let mut uppers = vec![rainbow];
    uppers.extend(hamilton_upper(g));
    uppers.extend(family.as_ref().and_then(|f| family_upper(f, k)));
    match k {
        1 => uppers.extend(colour_save_one_crx1(g).ok()),
        2 => uppers.extend(colour_save_one_crx2(g).ok()),
        _ => {}
    }
    let witness = uppers
        .into_iter()
        .map(|c| EdgeColouring::new(arc.clone(), c.colours().to_vec(), c.r()).unwrap_or(c))
        .min_by_key(|c| c.r())
        .expect("rainbow colouring is always present");

    let mut certs = Vec::new();
    let mut sub = Budget::new(budget.remaining());
    let distance = crx_lower_bound_distance(g, k, &mut sub)?;
    budget.charge(sub.used()).ok();
    certs.push(distance.certificate());
    if let Some(f) = &family {
        for rule in collision_rules(f, k) {
            if let Some(bound) = rule.bound() {
                certs.push(Certificate::ColourCollision { rule, bound });
            }
        }
    }
    certs.extend(obstruction_pairs(g, family.as_ref(), k)?);
    let best = certs
        .into_iter()
        .max_by_key(|c| c.lower_bound())
        .expect("distance certificate is always present");
    let lower = best.lower_bound();
    let upper = witness.r();
    if lower > upper {
        return Err(Error::Inconsistent(format!(
            "certificate bound {lower} exceeds construction {upper}"
        )));
    }
    Ok(CrxResult {
        objective: Objective::Cycles,
        kind: if lower == upper {
            ResultKind::Exact
        } else {
            ResultKind::Interval
        },
        lower,
        upper,
        witness: Some(witness),
        evidence: vec![Evidence {
            from: 1,
            to: lower - 1,
            certificate: best,
        }],
        nodes: budget.used(),
    })
}
