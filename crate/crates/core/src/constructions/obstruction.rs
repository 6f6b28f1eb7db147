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

use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::cycles::CycleQuery;
use crate::error::{Error, Result};
use crate::generators::petersen;
use crate::graph::Graph;
use crate::structure::{block_decomposition, is_minimally_2_connected};

/// Every cycle through `u` and `v` uses both edges `e` and `f`, and at least
/// one such cycle exists.
pub fn every_cycle_through_uses(g: &Graph, u: usize, v: usize, e: usize, f: usize) -> Result<bool> {
    let mut budget = Budget::unlimited();
    if CycleQuery::new(g).find(&[u, v], &mut budget)?.is_none() {
        return Ok(false);
    }
    for x in [e, f] {
        let h = g.without_edge(x);
        if CycleQuery::new(&h).find(&[u, v], &mut budget)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edge-blocks of `g` ordered along their chain, starting from the block
/// containing `start`. Returns the blocks' vertex lists and the shared
/// vertex between consecutive blocks.
fn block_chain(g: &Graph, start: usize) -> Option<(Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<usize>)> {
    let d = block_decomposition(g);
    let blocks: Vec<_> = d.blocks.into_iter().filter(|b| !b.edges.is_empty()).collect();
    let first = blocks.iter().position(|b| b.contains_vertex(start))?;
    let mut order = vec![first];
    let mut links = Vec::new();
    let mut used = vec![false; blocks.len()];
    used[first] = true;
    while order.len() < blocks.len() {
        let last = &blocks[*order.last().expect("non-empty")];
        let (next, link) = blocks.iter().enumerate().find_map(|(i, b)| {
            if used[i] {
                return None;
            }
            b.vertices.iter().find(|&&v| last.contains_vertex(v)).map(|&v| (i, v))
        })?;
        used[next] = true;
        order.push(next);
        links.push(link);
    }
    let vertices = order.iter().map(|&i| blocks[i].vertices.clone()).collect();
    let edges = order.iter().map(|&i| blocks[i].edges.clone()).collect();
    Some((vertices, edges, links))
}

/// Candidate pair from the chain structure of `G - e` and, inside the block
/// holding `f`, of that block minus `f`.
fn chain_candidate(g: &Graph, e: usize, f: usize) -> Option<(usize, usize)> {
    let (a, b) = g.edge(e);
    let (fa, fb) = g.edge(f);
    let h = g.without_edge(e);
    let f_h = h.edge_id(fa, fb)?;
    let (mut verts, mut edges, mut links) = block_chain(&h, a)?;
    let (mut x0, mut xp) = (a, b);
    let mut ell = edges.iter().position(|blk| blk.contains(&f_h))?;
    if ell == 0 {
        verts.reverse();
        edges.reverse();
        links.reverse();
        std::mem::swap(&mut x0, &mut xp);
        ell = edges.len() - 1;
    }
    let _ = xp;
    let x_prev = links[ell - 1];
    let x_next = if ell + 1 < edges.len() { links[ell] } else { xp };
    if edges[ell].len() == 1 {
        let far = if fa == x_prev { fb } else { fa };
        debug_assert_eq!(far, x_next);
        return Some((x0, far));
    }
    let inner_edges = &edges[ell];
    let (inner, kept) = h.edge_subgraph(|id| id != f_h && inner_edges.binary_search(&id).is_ok());
    let _ = kept;
    for (y0, yq) in [(fa, fb), (fb, fa)] {
        let (dverts, _, _) = block_chain(&inner, y0)?;
        let q = dverts.len();
        let holds = |x: usize| -> Vec<usize> { (0..q).filter(|&i| dverts[i].binary_search(&x).is_ok()).collect() };
        let (s_idx, t_idx) = (holds(x_prev), holds(x_next));
        let pairs = || {
            s_idx
                .iter()
                .flat_map(|&s| t_idx.iter().map(move |&t| (s, t)))
                .filter(|&(s, t)| s <= t)
        };
        if pairs().any(|(_, t)| t + 1 < q) {
            return Some((x0, yq));
        }
        if pairs().any(|(s, _)| s > 0) {
            return Some((x0, y0));
        }
    }
    None
}

/// For a minimally 2-connected `G` and distinct edges `e`, `f`: two vertices
/// such that every cycle through both uses `e` and `f`. The pair comes from
/// the block chains of `G - e` and of the block holding `f`; it is then
/// checked by exhaustive cycle search, with a scan over all pairs as the
/// fallback.
pub fn minimal_2conn_obstruction(g: &Graph, e: usize, f: usize) -> Result<(usize, usize)> {
    if e == f || e >= g.edge_count() || f >= g.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "need two distinct edge ids, got {e} and {f}"
        )));
    }
    if !is_minimally_2_connected(g) {
        return Err(Error::NotMinimallyTwoConnected);
    }
    let order = |(u, v): (usize, usize)| (u.min(v), u.max(v));
    if let Some(pair) = chain_candidate(g, e, f).or_else(|| chain_candidate(g, f, e)) {
        if pair.0 != pair.1 && every_cycle_through_uses(g, pair.0, pair.1, e, f)? {
            return Ok(order(pair));
        }
    }
    for v in 0..g.n() {
        for u in 0..v {
            if every_cycle_through_uses(g, u, v, e, f)? {
                return Ok((u, v));
            }
        }
    }
    Err(Error::Inconsistent(format!("no vertex pair forces edges {e} and {f}")))
}

/// Every Hamilton cycle of `g`, each as its sorted edge ids.
pub fn hamilton_cycles(g: &Graph, budget: &mut Budget) -> Result<Vec<Vec<usize>>> {
    let all: Vec<usize> = (0..g.n()).collect();
    let mut out = Vec::new();
    let _ = CycleQuery::new(g).for_each(&all, budget, |_, edges| {
        if edges.len() == g.n() {
            let mut e = edges.to_vec();
            e.sort_unstable();
            out.push(e);
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Whether `P - v` has a Hamilton cycle and all of them use `e` and `f`.
fn forces_pair(p: &Graph, v: usize, e: usize, f: usize) -> Result<bool> {
    let (h, old) = p.without_vertex(v);
    let to_old = |id: usize| {
        let (a, b) = h.edge(id);
        p.edge_id(old[a], old[b]).expect("subgraph edge")
    };
    let cycles = hamilton_cycles(&h, &mut Budget::unlimited())?;
    Ok(!cycles.is_empty()
        && cycles.iter().all(|c| {
            let mapped: Vec<usize> = c.iter().map(|&x| to_old(x)).collect();
            mapped.contains(&e) && mapped.contains(&f)
        }))
}

/// For distinct Petersen edges `e`, `f`: a vertex `v` outside both such that
/// every Hamilton cycle of `P - v` uses `e` and `f`. Adjacent edges meeting
/// at `u` give the third neighbour of `u`; otherwise the lowest vertex
/// adjacent to an end of each is taken. The choice is checked by listing
/// all Hamilton cycles of `P - v`.
pub fn petersen_pair_obstruction(e: usize, f: usize) -> Result<usize> {
    let p = petersen();
    if e == f || e >= p.edge_count() || f >= p.edge_count() {
        return Err(Error::InvalidParameter(format!(
            "need two distinct Petersen edges, got {e} and {f}"
        )));
    }
    let (a, b) = p.edge(e);
    let (c, d) = p.edge(f);
    let ends = [a, b, c, d];
    let outside = |v: &usize| !ends.contains(v);
    let shared = [a, b].into_iter().find(|&x| x == c || x == d);
    let rule = match shared {
        Some(u) => p.neighbours(u).iter().map(|&(w, _)| w).find(outside),
        None => (0..p.n()).filter(outside).find(|&v| {
            let touches = |x: usize, y: usize| p.has_edge(v, x) || p.has_edge(v, y);
            touches(a, b) && touches(c, d)
        }),
    };
    let candidates = rule.into_iter().chain((0..p.n()).filter(outside));
    for v in candidates {
        if forces_pair(&p, v, e, f)? {
            return Ok(v);
        }
    }
    Err(Error::Inconsistent(format!(
        "no vertex forces Petersen edges {e} and {f}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle};

    #[test]
    fn cycle_pairs() {
        let g = cycle(5).unwrap();
        let (u, v) = minimal_2conn_obstruction(&g, 0, 3).unwrap();
        assert!(every_cycle_through_uses(&g, u, v, 0, 3).unwrap());
    }

    #[test]
    fn k23_shared_vertex() {
        let g = complete_bipartite(2, 3).unwrap();
        let (u, v) = minimal_2conn_obstruction(&g, 0, 1).unwrap();
        assert!(every_cycle_through_uses(&g, u, v, 0, 1).unwrap());
    }

    #[test]
    fn k4_is_rejected() {
        assert_eq!(
            minimal_2conn_obstruction(&complete(4).unwrap(), 0, 1),
            Err(Error::NotMinimallyTwoConnected)
        );
    }

    #[test]
    fn petersen_adjacent_rule() {
        // edges 0-1 and 0-4 meet at 0; its third neighbour is 5
        let p = petersen();
        let e = p.edge_id(0, 1).unwrap();
        let f = p.edge_id(0, 4).unwrap();
        assert_eq!(petersen_pair_obstruction(e, f).unwrap(), 5);
    }
}
