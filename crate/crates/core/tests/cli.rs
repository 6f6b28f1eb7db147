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

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn crx(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_crx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn crx");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = crx(args, stdin);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("json output")
}

#[test]
fn wheel_pipeline_is_certified() {
    let doc = ok(&["gen", "wheel", "n=5"], b"");
    let coloured = ok(&["colour", "wheel", "-k", "2"], &doc);
    let report = json(&ok(&["verify", "-k", "2"], &coloured));
    assert_eq!(report["status"], "certified");
    assert_eq!(report["colours"], 5);
}

#[test]
fn exact_solve_reports_every_exhausted_count() {
    let doc = ok(&["gen", "cycle", "n=5"], b"");
    let res = json(&ok(&["solve", "-k", "1"], &doc));
    assert_eq!(res["kind"], "exact");
    assert_eq!(res["lower"], 5);
    let rs: Vec<u64> = res["evidence"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["certificate"]["r"].as_u64().unwrap())
        .collect();
    assert_eq!(rs, [1, 2, 3, 4]);
}

#[test]
fn counterexample_exits_with_one() {
    let doc = ok(&["gen", "complete", "n=4"], b"");
    let coloured = ok(&["colour", "complete2rainbow"], &doc);
    // three colours suffice for k = 2 but not for all four vertices
    let out = crx(&["verify", "-k", "4"], &coloured);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out.stdout)["status"], "counterexample");
}

#[test]
fn out_of_scope_and_bad_input_exit_with_two() {
    let doc = ok(&["gen", "wheel", "n=9"], b"");
    let out = crx(&["solve", "-k", "2"], &doc);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("scope"));

    assert_eq!(crx(&["gen", "cube", "n=3"], b"").status.code(), Some(2));
    assert_eq!(crx(&["verify", "-k", "1"], b"{not json").status.code(), Some(2));
    let random = crx(
        &["colour", "complete_random", "-k", "3"],
        &ok(&["gen", "complete", "n=5"], b""),
    );
    assert_eq!(random.status.code(), Some(2), "random construction without seed");
}

#[test]
fn interval_mode_brackets_wheel() {
    let doc = ok(&["gen", "wheel", "n=9"], b"");
    let res = json(&ok(&["solve", "-k", "2", "--mode", "interval"], &doc));
    assert_eq!(res["lower"], 6);
    assert_eq!(res["upper"], 7);
}

#[test]
fn index_solve_and_analyze() {
    let doc = ok(&["gen", "cycle", "n=5"], b"");
    let res = json(&ok(&["solve", "-k", "3", "--index"], &doc));
    assert_eq!(res["lower"], 3);
    let report = json(&ok(&["analyze"], &ok(&["gen", "petersen"], b"")));
    assert_eq!(report["hypohamiltonian"], true);
}

#[test]
fn dot_output_lists_coloured_edges() {
    let doc = ok(&["gen", "cycle", "n=4"], b"");
    let coloured = ok(&["colour", "rainbow"], &doc);
    let dot = String::from_utf8(ok(&["dot"], &coloured)).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert!(dot.contains("label=\"3\""));
}
