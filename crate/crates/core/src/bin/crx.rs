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

//! `crx`: generate graphs, colour them, verify, solve and export.
//!
//! Documents are JSON (see `crx_core::document`) read from a file or stdin
//! and written to stdout. Exit status: 0 certified or solved, 1
//! counterexample found, 2 budget exhausted, unsupported or error.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crx_core::constructions::{
    colour_balanced_multipartite_random, colour_bipartite_with, colour_complete_2rainbow, colour_complete_random,
    colour_cube, colour_cube_recursive, colour_join_rxk, colour_multipartite_blowup, colour_save_one_crx1,
    colour_save_one_crx2, colour_wheel, BipartiteScheme,
};
use crx_core::document::GraphDocument;
use crx_core::dot::to_dot;
use crx_core::generators::{Family, FAMILY_NAMES};
use crx_core::search::{verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring, VerifyOptions};
use crx_core::solver::{crx_exact, crx_interval, rx_exact, CrxResult, ResultKind, SolveOptions, StartPolicy};
use crx_core::structure::{
    block_decomposition, graph_invariants, in_family_fk_within, is_hypohamiltonian, is_minimally_2_connected,
    is_two_connected,
};
use crx_core::{Budget, EdgeColouring, Error, Graph};

#[derive(Parser)]
#[command(
    name = "crx",
    version,
    about = "k-rainbow cycle colourings: construct, verify, solve"
)]
struct Cli {
    /// Cap on worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph as a document, e.g. `crx gen wheel n=5`.
    Gen {
        /// One of: cycle, path, complete, complete_bipartite,
        /// complete_multipartite, wheel, hypercube, petersen,
        /// path_cycle_join, theta.
        family: String,
        /// Parameters as key=value; lists are comma separated
        /// (sizes=2,2,3).
        params: Vec<String>,
    },
    /// Attach a colouring from a named construction.
    Colour {
        construction: Construction,
        /// Document to read (default: stdin).
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        k: Option<usize>,
        /// Required by the random constructions.
        #[arg(long)]
        seed: Option<u64>,
        /// Sampling attempts for the random constructions.
        #[arg(long, default_value_t = 2000)]
        attempts: usize,
        /// Bipartite scheme: auto, spanning4, rainbow, colex, eight_colour, six_k.
        #[arg(long, default_value = "auto")]
        scheme: String,
        /// Block dimension for cube_recursive.
        #[arg(long, default_value_t = 3)]
        block: usize,
    },
    /// Check the document's colouring.
    Verify {
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        k: usize,
        /// Check rainbow trees (k-rainbow index) instead of cycles.
        #[arg(long)]
        index: bool,
        /// Search nodes per k-set.
        #[arg(long, default_value_t = Budget::DEFAULT_LIMIT)]
        budget: u64,
    },
    /// Compute crx_k (or rx_k with --index) exactly or as an interval.
    Solve {
        #[arg(short, long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long)]
        index: bool,
        /// Total search nodes.
        #[arg(long, default_value_t = SolveOptions::default().budget)]
        budget: u64,
        /// Enumerate beyond the default scope (16 edges, 10^5 vertex sets).
        #[arg(long)]
        force: bool,
        /// Start enumeration at the distance bound instead of one colour.
        #[arg(long)]
        from_bound: bool,
    },
    /// Structural report: blocks, girth, Hamiltonicity, F_k membership.
    Analyze {
        #[arg(short, long)]
        input: Option<PathBuf>,
        /// Largest k whose F_k membership is reported.
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long, default_value_t = Budget::DEFAULT_LIMIT)]
        budget: u64,
    },
    /// Graphviz DOT with the colouring drawn on the edges.
    Dot {
        #[arg(short, long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Interval,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Construction {
    Rainbow,
    Wheel,
    Complete2rainbow,
    MultipartiteBlowup,
    Bipartite,
    Cube,
    CubeRecursive,
    JoinRxk,
    SaveOneCrx1,
    SaveOneCrx2,
    CompleteRandom,
    MultipartiteRandom,
}

/// A failure with its exit status.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(2, e.to_string())
    }
}

fn fail(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn read_doc(input: &Option<PathBuf>) -> Result<GraphDocument, Failure> {
    let text = match input {
        Some(p) => std::fs::read_to_string(p).map_err(|e| fail(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| fail(e.to_string()))?;
            s
        }
    };
    Ok(GraphDocument::parse(&text)?)
}

fn print_json<T: Serialize>(v: &T) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("reports serialise")
    ));
}

/// Writes to stdout; a closed pipe (`crx ... | head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn parse_params(params: &[String]) -> Result<BTreeMap<String, Value>, Failure> {
    let mut out = BTreeMap::new();
    for p in params {
        let (key, raw) = p
            .split_once('=')
            .ok_or_else(|| fail(format!("expected key=value, got `{p}`")))?;
        let ints: Result<Vec<u64>, _> = raw.split(',').map(|x| x.trim().parse::<u64>()).collect();
        let ints = ints.map_err(|_| fail(format!("`{key}` must be an integer or comma-separated integers")))?;
        let value = if raw.contains(',') || key == "sizes" || key == "lengths" {
            Value::from(ints)
        } else {
            Value::from(ints[0])
        };
        out.insert(key.to_string(), value);
    }
    Ok(out)
}

fn doc_family(doc: &GraphDocument, g: &Graph) -> Result<Option<Family>, Failure> {
    Ok(doc.family()?.or_else(|| Family::recognise(g)))
}

fn need_k(k: Option<usize>) -> Result<usize, Failure> {
    k.ok_or_else(|| fail("this construction needs -k"))
}

fn need_seed(seed: Option<u64>) -> Result<u64, Failure> {
    seed.ok_or_else(|| fail("random constructions need an explicit --seed"))
}

fn wrong_family(c: &str) -> Failure {
    fail(format!("construction `{c}` does not apply to this graph"))
}

#[allow(clippy::too_many_arguments)]
fn cmd_colour(
    construction: Construction,
    input: &Option<PathBuf>,
    k: Option<usize>,
    seed: Option<u64>,
    attempts: usize,
    scheme: &str,
    block: usize,
) -> Result<(), Failure> {
    let mut doc = read_doc(input)?;
    let g = doc.graph()?;
    let family = doc_family(&doc, &g)?;
    let name = construction
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let colouring: EdgeColouring = match (construction, &family) {
        (Construction::Rainbow, _) => EdgeColouring::rainbow(g.clone().into()),
        (Construction::Wheel, Some(Family::Wheel { n })) => colour_wheel(*n, need_k(k)?)?,
        (Construction::Complete2rainbow, Some(Family::Complete { n })) => colour_complete_2rainbow(*n)?,
        (Construction::MultipartiteBlowup, Some(Family::CompleteMultipartite { sizes })) => {
            colour_multipartite_blowup(sizes)?
        }
        (Construction::Bipartite, Some(Family::CompleteBipartite { m, n })) => {
            let scheme =
                BipartiteScheme::from_name(scheme).ok_or_else(|| fail(format!("unknown scheme `{scheme}`")))?;
            colour_bipartite_with(*m, *n, need_k(k)?, scheme)?
        }
        (Construction::Cube, Some(Family::Hypercube { n })) => colour_cube(*n, need_k(k)?)?,
        (Construction::CubeRecursive, Some(Family::Hypercube { n })) => {
            colour_cube_recursive(*n, need_k(k)?, block)?.colouring
        }
        (Construction::JoinRxk, Some(Family::PathCycleJoin { k, t })) => colour_join_rxk(*k, *t)?,
        (Construction::SaveOneCrx1, _) => colour_save_one_crx1(&g)?,
        (Construction::SaveOneCrx2, _) => colour_save_one_crx2(&g)?,
        (Construction::CompleteRandom, Some(Family::Complete { n })) => {
            colour_complete_random(*n, need_k(k)?, need_seed(seed)?, attempts)?.colouring
        }
        (Construction::MultipartiteRandom, Some(f)) => {
            let (t, n) = match f {
                Family::CompleteBipartite { m, n } if m == n => (2, *n),
                Family::CompleteMultipartite { sizes } if sizes.iter().all(|&s| s == sizes[0]) => {
                    (sizes.len(), sizes[0])
                }
                _ => return Err(wrong_family(&name)),
            };
            colour_balanced_multipartite_random(t, n, need_k(k)?, need_seed(seed)?, attempts)?.colouring
        }
        _ => return Err(wrong_family(&name)),
    };
    doc.set_colouring(&colouring);
    let meta = doc.metadata_mut();
    meta.construction = Some(name);
    meta.k = k;
    meta.seed = seed;
    emit(&format!("{}\n", doc.to_json()));
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput {
    objective: &'static str,
    k: usize,
    colours: usize,
    #[serde(flatten)]
    report: crx_core::search::VerificationReport,
}

fn cmd_verify(input: &Option<PathBuf>, k: usize, index: bool, budget: u64) -> Result<(), Failure> {
    let doc = read_doc(input)?;
    let c = doc.colouring()?.ok_or_else(|| fail("document has no colouring"))?;
    let opts = VerifyOptions {
        nodes_per_set: budget,
        ..VerifyOptions::parallel()
    };
    let report = if index {
        verify_k_rainbow_index_colouring(&c, k, &opts)?
    } else {
        verify_k_rainbow_cycle_colouring(&c, k, &opts)?
    };
    let certified = report.is_certified();
    print_json(&VerifyOutput {
        objective: if index { "trees" } else { "cycles" },
        k,
        colours: c.r(),
        report,
    });
    if certified {
        Ok(())
    } else {
        Err(Failure(1, String::new()))
    }
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    k: usize,
    mode: &'static str,
    #[serde(flatten)]
    result: &'a CrxResult,
}

fn cmd_solve(input: &Option<PathBuf>, k: usize, mode: Mode, index: bool, opts: SolveOptions) -> Result<(), Failure> {
    let doc = read_doc(input)?;
    let g = doc.graph()?;
    let (result, mode_name) = match (mode, index) {
        (Mode::Exact, false) => (crx_exact(&g, k, &opts)?, "exact"),
        (Mode::Exact, true) => (rx_exact(&g, k, &opts)?, "exact"),
        (Mode::Interval, false) => (crx_interval(&g, k, &opts)?, "interval"),
        (Mode::Interval, true) => return Err(fail("interval mode is only available for crx")),
    };
    print_json(&SolveOutput {
        k,
        mode: mode_name,
        result: &result,
    });
    match (mode, result.kind) {
        (_, ResultKind::Exact) | (Mode::Interval, ResultKind::Interval) => Ok(()),
        _ => Err(Failure(2, String::new())),
    }
}

#[derive(Serialize)]
struct FamilyOutput {
    name: &'static str,
    params: BTreeMap<String, Value>,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    n: usize,
    e: usize,
    connected: bool,
    two_connected: bool,
    minimally_two_connected: bool,
    blocks: usize,
    cut_vertices: Vec<usize>,
    girth: Option<usize>,
    circumference: Option<usize>,
    hamiltonian: Option<bool>,
    hypohamiltonian: Option<bool>,
    family: Option<FamilyOutput>,
    /// `k -> membership in F_k`; null when the budget ran out.
    in_family_fk: BTreeMap<usize, Option<bool>>,
}

fn cmd_analyze(input: &Option<PathBuf>, max_k: usize, budget: u64) -> Result<(), Failure> {
    let doc = read_doc(input)?;
    let g = doc.graph()?;
    let blocks = block_decomposition(&g);
    let inv = graph_invariants(&g, &mut Budget::new(budget));
    let hypo = is_hypohamiltonian(&g, &mut Budget::new(budget)).ok();
    let in_family_fk = (1..=max_k.min(g.n()))
        .map(|k| (k, in_family_fk_within(&g, k, &mut Budget::new(budget)).ok()))
        .collect();
    print_json(&AnalyzeOutput {
        n: g.n(),
        e: g.edge_count(),
        connected: g.is_connected(),
        two_connected: is_two_connected(&g),
        minimally_two_connected: is_minimally_2_connected(&g),
        blocks: blocks.blocks.len(),
        cut_vertices: blocks.cut_vertices,
        girth: crx_core::structure::girth(&g),
        circumference: inv.as_ref().ok().map(|i| i.circumference),
        hamiltonian: inv.as_ref().ok().map(|i| i.is_hamiltonian),
        hypohamiltonian: hypo,
        family: doc_family(&doc, &g)?.map(|f| FamilyOutput {
            name: f.name(),
            params: f.params(),
        }),
        in_family_fk,
    });
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| fail(e.to_string()))?;
    }
    match cli.command {
        Command::Gen { family, params } => {
            if !FAMILY_NAMES.contains(&family.as_str()) {
                return Err(fail(format!(
                    "unknown family `{family}`; expected one of {}",
                    FAMILY_NAMES.join(", ")
                )));
            }
            let f = Family::from_params(&family, &parse_params(&params)?)?;
            emit(&format!("{}\n", GraphDocument::from_family(&f)?.to_json()));
            Ok(())
        }
        Command::Colour {
            construction,
            input,
            k,
            seed,
            attempts,
            scheme,
            block,
        } => cmd_colour(construction, &input, k, seed, attempts, &scheme, block),
        Command::Verify {
            input,
            k,
            index,
            budget,
        } => cmd_verify(&input, k, index, budget),
        Command::Solve {
            input,
            k,
            mode,
            index,
            budget,
            force,
            from_bound,
        } => {
            let opts = SolveOptions {
                budget,
                force,
                start: if from_bound {
                    StartPolicy::DistanceBound
                } else {
                    StartPolicy::Exhaustive
                },
            };
            cmd_solve(&input, k, mode, index, opts)
        }
        Command::Analyze { input, max_k, budget } => cmd_analyze(&input, max_k, budget),
        Command::Dot { input } => {
            let doc = read_doc(&input)?;
            emit(&to_dot(&doc.graph()?, doc.colouring()?.as_ref()));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
