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

//! C ABI for `crx-core`.
//!
//! Graphs and colourings are opaque heap handles released with
//! `crx_graph_free` and `crx_colouring_free`. Every fallible call returns a
//! [`CrxStatus`]; on failure `crx_last_error_message` describes the error
//! for the calling thread. Panics are caught at the boundary and reported
//! as [`CrxStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use crx_core::constructions::{colour_bipartite, colour_complete_2rainbow, colour_cube, colour_wheel};
use crx_core::generators;
use crx_core::search::{verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring, VerifyOptions};
use crx_core::solver::{crx_exact, rx_exact, ResultKind, SolveOptions};
use crx_core::{EdgeColouring, Error, Graph};

/// Opaque graph handle.
pub struct CrxGraph(Arc<Graph>);

/// Opaque edge colouring handle.
pub struct CrxColouring(EdgeColouring);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrxStatus {
    Ok = 0,
    /// Verification found a k-set without a rainbow cycle or tree.
    Counterexample = 1,
    NullPointer = 2,
    InvalidArgument = 3,
    InvalidGraph = 4,
    InvalidColouring = 5,
    NotInFamily = 6,
    BudgetExceeded = 7,
    Unsupported = 8,
    Failed = 9,
    Panic = 10,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> CrxStatus {
    match e {
        Error::InvalidParameter(_) => CrxStatus::InvalidArgument,
        Error::InvalidGraph(_) | Error::NotTwoConnected | Error::IsCycle => CrxStatus::InvalidGraph,
        Error::InvalidColouring(_) => CrxStatus::InvalidColouring,
        Error::NotInFamily { .. } => CrxStatus::NotInFamily,
        Error::BudgetExceeded { .. } => CrxStatus::BudgetExceeded,
        Error::RegimeUnsupported(_) | Error::OutOfScope(_) => CrxStatus::Unsupported,
        _ => CrxStatus::Failed,
    }
}

/// Failure inside an FFI call.
enum Fail {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<CrxStatus, Fail>) -> CrxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("null pointer passed as `{what}`"));
            CrxStatus::NullPointer
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside crx".into());
            CrxStatus::Panic
        }
    }
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

unsafe fn handle<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

fn invalid(msg: String) -> Fail {
    Fail::Core(Error::InvalidParameter(msg))
}

fn put_graph(out: *mut *mut CrxGraph, g: Graph) -> Result<CrxStatus, Fail> {
    let out = unsafe { out_ptr(out, "out")? };
    *out = Box::into_raw(Box::new(CrxGraph(Arc::new(g))));
    Ok(CrxStatus::Ok)
}

fn put_colouring(out: *mut *mut CrxColouring, c: EdgeColouring) -> Result<CrxStatus, Fail> {
    let out = unsafe { out_ptr(out, "out")? };
    *out = Box::into_raw(Box::new(CrxColouring(c)));
    Ok(CrxStatus::Ok)
}

/// Message for the last failure on this thread, or null. Release with
/// `crx_string_free`.
#[no_mangle]
pub extern "C" fn crx_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_deref() {
        Some(m) => CString::new(m.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    })
}

/// # Safety
/// `s` must come from `crx_last_error_message` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn crx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, ...`). Edge ids follow the sorted edge list.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut CrxGraph,
) -> CrxStatus {
    guard(|| {
        let flat = if edge_count == 0 {
            &[][..]
        } else if edges.is_null() {
            return Err(Fail::Null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        put_graph(out, Graph::new(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?)
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_cycle(n: usize, out: *mut *mut CrxGraph) -> CrxStatus {
    guard(|| put_graph(out, generators::cycle(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_complete(n: usize, out: *mut *mut CrxGraph) -> CrxStatus {
    guard(|| put_graph(out, generators::complete(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_complete_bipartite(m: usize, n: usize, out: *mut *mut CrxGraph) -> CrxStatus {
    guard(|| put_graph(out, generators::complete_bipartite(m, n)?))
}

/// Rim `0..n`, centre `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_wheel(n: usize, out: *mut *mut CrxGraph) -> CrxStatus {
    guard(|| put_graph(out, generators::wheel(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_hypercube(n: usize, out: *mut *mut CrxGraph) -> CrxStatus {
    guard(|| put_graph(out, generators::hypercube(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_petersen(out: *mut *mut CrxGraph) -> CrxStatus {
    guard(|| put_graph(out, generators::petersen()))
}

/// # Safety
/// `g` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_free(g: *mut CrxGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_vertex_count(g: *const CrxGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_edge_count(g: *const CrxGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Endpoints of edge `id`, smaller first.
///
/// # Safety
/// `g` must be a live handle; `u` and `v` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_graph_edge(g: *const CrxGraph, id: usize, u: *mut usize, v: *mut usize) -> CrxStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        if id >= g.0.edge_count() {
            return Err(invalid(format!("edge id {id} out of range")));
        }
        let (a, b) = g.0.edge(id);
        *out_ptr(u, "u")? = a;
        *out_ptr(v, "v")? = b;
        Ok(CrxStatus::Ok)
    })
}

/// Colouring of `g` with one colour in `0..r` per edge id; every colour
/// must be used.
///
/// # Safety
/// `g` must be a live handle, `colours` must hold one value per edge and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_colouring_new(
    g: *const CrxGraph,
    colours: *const usize,
    len: usize,
    r: usize,
    out: *mut *mut CrxColouring,
) -> CrxStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        let colours = if len == 0 {
            Vec::new()
        } else {
            handle(colours, "colours")?;
            std::slice::from_raw_parts(colours, len).to_vec()
        };
        put_colouring(out, EdgeColouring::new(g.0.clone(), colours, r)?)
    })
}

/// Certified wheel colouring of `W_n` for `k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_colour_wheel(n: usize, k: usize, out: *mut *mut CrxColouring) -> CrxStatus {
    guard(|| put_colouring(out, colour_wheel(n, k)?))
}

/// Certified 3-colouring of `K_n` for `k <= 2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_colour_complete_2rainbow(n: usize, out: *mut *mut CrxColouring) -> CrxStatus {
    guard(|| put_colouring(out, colour_complete_2rainbow(n)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_colour_bipartite(m: usize, n: usize, k: usize, out: *mut *mut CrxColouring) -> CrxStatus {
    guard(|| put_colouring(out, colour_bipartite(m, n, k)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_colour_cube(n: usize, k: usize, out: *mut *mut CrxColouring) -> CrxStatus {
    guard(|| put_colouring(out, colour_cube(n, k)?))
}

/// # Safety
/// `c` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn crx_colouring_free(c: *mut CrxColouring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Number of colours `r`, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crx_colouring_colour_count(c: *const CrxColouring) -> usize {
    c.as_ref().map_or(0, |c| c.0.r())
}

/// Number of edges of the coloured graph, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crx_colouring_edge_count(c: *const CrxColouring) -> usize {
    c.as_ref().map_or(0, |c| c.0.graph().edge_count())
}

/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn crx_colouring_edge_colour(c: *const CrxColouring, id: usize, out: *mut usize) -> CrxStatus {
    guard(|| {
        let c = handle(c, "colouring")?;
        if id >= c.0.graph().edge_count() {
            return Err(invalid(format!("edge id {id} out of range")));
        }
        *out_ptr(out, "out")? = c.0.colour(id);
        Ok(CrxStatus::Ok)
    })
}

/// Checks every k-set for a rainbow cycle (`trees == false`) or rainbow
/// tree (`trees == true`), spending at most `nodes_per_set` search nodes on
/// each. Returns `CRX_STATUS_COUNTEREXAMPLE` and writes the first failing
/// set (colex order) into `bad_set`, which must hold `k` values, if not
/// null.
///
/// # Safety
/// `c` must be a live handle; `bad_set` must be null or hold `k` values.
#[no_mangle]
pub unsafe extern "C" fn crx_verify(
    c: *const CrxColouring,
    k: usize,
    trees: bool,
    nodes_per_set: u64,
    bad_set: *mut usize,
) -> CrxStatus {
    guard(|| {
        let c = handle(c, "colouring")?;
        let opts = VerifyOptions {
            nodes_per_set,
            ..VerifyOptions::parallel()
        };
        let report = if trees {
            verify_k_rainbow_index_colouring(&c.0, k, &opts)?
        } else {
            verify_k_rainbow_cycle_colouring(&c.0, k, &opts)?
        };
        match report.bad_set {
            None => Ok(CrxStatus::Ok),
            Some(set) => {
                if !bad_set.is_null() {
                    std::slice::from_raw_parts_mut(bad_set, set.len()).copy_from_slice(&set);
                }
                Ok(CrxStatus::Counterexample)
            }
        }
    })
}

/// Exact `crx_k(g)` (or `rx_k(g)` when `trees`) within `budget` nodes.
/// Writes the bounds; they are equal when the value is exact. When the
/// budget runs out the status is `CRX_STATUS_BUDGET_EXCEEDED` and the
/// bounds hold the interval reached.
///
/// # Safety
/// `g` must be a live handle; `lower` and `upper` must be writable.
#[no_mangle]
pub unsafe extern "C" fn crx_solve_exact(
    g: *const CrxGraph,
    k: usize,
    trees: bool,
    budget: u64,
    lower: *mut usize,
    upper: *mut usize,
) -> CrxStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        let lower = out_ptr(lower, "lower")?;
        let upper = out_ptr(upper, "upper")?;
        let opts = SolveOptions {
            budget,
            ..SolveOptions::default()
        };
        let res = if trees {
            rx_exact(&g.0, k, &opts)?
        } else {
            crx_exact(&g.0, k, &opts)?
        };
        *lower = res.lower;
        *upper = res.upper;
        Ok(match res.kind {
            ResultKind::Exact => CrxStatus::Ok,
            _ => {
                set_error(format!("budget of {budget} nodes exhausted"));
                CrxStatus::BudgetExceeded
            }
        })
    })
}
