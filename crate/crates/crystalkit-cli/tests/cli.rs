//! Runs the binary against a golden corpus and checks exit codes.
//!
//! Set `CRYSTALKIT_BLESS=1` to rewrite the golden files from the current
//! binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystalkit"))
        .args(args)
        .env_remove("CRYSTALKIT_BUDGET")
        .output()
        .expect("binary runs")
}

fn run_with_budget(args: &[&str], budget: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystalkit"))
        .args(args)
        .env("CRYSTALKIT_BUDGET", budget)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const CASES: &[(&str, &[&str])] = &[
    (
        "lr",
        &["lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"],
    ),
    (
        "lr_json",
        &[
            "lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1", "--json",
        ],
    ),
    (
        "tensor_decompose",
        &["tensor-decompose", "--mu", "2,1", "--nu", "1"],
    ),
    (
        "tensor_decompose_json",
        &[
            "tensor-decompose",
            "--mu",
            "2",
            "--nu",
            "1",
            "--n",
            "4",
            "--json",
        ],
    ),
    ("bitableaux", &["bitableaux", "--mu", "1", "--nu", "1"]),
    (
        "bitableaux_json",
        &["bitableaux", "--mu", "2,1", "--nu", "1", "--json"],
    ),
    ("howe", &["howe", "--m", "2", "--n", "2"]),
    ("howe_json", &["howe", "--m", "2", "--n", "3", "--json"]),
    (
        "h_set",
        &["h-set", "--mu", "1", "--nu", "1", "--zeta", "", "--eta", ""],
    ),
    (
        "h_set_json",
        &[
            "h-set", "--mu", "2", "--nu", "1,1", "--zeta", "1", "--eta", "1", "--json",
        ],
    ),
    ("straighten", &["straighten", "--word", "(1,2),(2,1)"]),
    (
        "straighten_json",
        &[
            "straighten",
            "--word",
            "(2,2),(1,2),(2,1)",
            "--m",
            "2",
            "--n",
            "2",
            "--json",
        ],
    ),
    (
        "canonical_basis",
        &[
            "canonical-basis",
            "--m",
            "2",
            "--n",
            "2",
            "--row-weight",
            "1,1",
            "--col-weight",
            "1,1",
        ],
    ),
    (
        "canonical_basis_json",
        &[
            "canonical-basis",
            "--m",
            "2",
            "--n",
            "3",
            "--row-weight",
            "2,1",
            "--col-weight",
            "1,1,1",
            "--json",
        ],
    ),
    (
        "crystal_graph_sst",
        &["crystal-graph", "--kind", "sst", "--mu", "2,1", "--n", "3"],
    ),
    (
        "crystal_graph_dual",
        &["crystal-graph", "--kind", "dual", "--mu", "1", "--n", "3"],
    ),
    (
        "crystal_graph_bitableaux",
        &[
            "crystal-graph",
            "--kind",
            "bitableaux",
            "--mu",
            "1",
            "--nu",
            "1",
            "--n",
            "2",
        ],
    ),
    (
        "crystal_graph_matrix_json",
        &[
            "crystal-graph",
            "--kind",
            "matrix",
            "--m",
            "2",
            "--n",
            "2",
            "--json",
        ],
    ),
    (
        "socle_layer",
        &[
            "socle", "--a", "1", "--b", "", "--g", "", "--d2", "1", "--layer", "1",
        ],
    ),
    (
        "socle_all",
        &["socle", "--a", "2", "--b", "", "--g", "", "--d2", "1,1"],
    ),
    ("transition_check", &["transition-check", "--degree", "3"]),
    (
        "transition_check_json",
        &["transition-check", "--degree", "3", "--json"],
    ),
    (
        "cauchy_ee",
        &[
            "cauchy-verify",
            "--kind",
            "E-E",
            "--k",
            "1",
            "--degree",
            "3",
        ],
    ),
    (
        "cauchy_eh_json",
        &[
            "cauchy-verify",
            "--kind",
            "E-H",
            "--k",
            "2",
            "--degree",
            "3",
            "--json",
        ],
    ),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
}

#[test]
fn golden_corpus() {
    let bless = std::env::var_os("CRYSTALKIT_BLESS").is_some();
    for (name, args) in CASES {
        let out = run(args);
        assert!(out.status.success(), "{name}: {}", stderr(&out));
        let path = golden_dir().join(format!("{name}.out"));
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let want = std::fs::read(&path)
            .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        assert!(
            out.stdout == want,
            "{name} differs from {}:\n{}",
            path.display(),
            stdout(&out)
        );
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    for (name, args) in CASES {
        assert_eq!(run(args).stdout, run(args).stdout, "{name}");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&run(&[
            "lr", "--lam", "3,2,1", "--mu", "2,1", "--nu", "2,1"
        ])),
        "2\n"
    );

    let socle = run(&[
        "socle", "--a", "1", "--b", "", "--g", "", "--d2", "1", "--layer", "1",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&socle.stdout).unwrap();
    assert_eq!(v["layer"], 1);
    assert_eq!(
        v["entries"],
        serde_json::json!([{ "pair": { "plus": [], "minus": [] }, "mult": 1 }])
    );

    let howe = stdout(&run(&["howe", "--m", "2", "--n", "2"]));
    assert_eq!(howe.lines().count(), 6);
}

#[test]
fn json_documents_carry_a_schema() {
    for (name, args) in CASES {
        let out = run(args);
        if args.contains(&"--json") || args[0] == "socle" {
            let v: serde_json::Value =
                serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(v["schema"], "crystalkit/1", "{name}");
        }
    }
}

fn assert_error(out: &Output, code: i32, kind: &str) {
    assert_eq!(out.status.code(), Some(code), "stderr: {}", stderr(out));
    let err = stderr(out);
    assert_eq!(err.lines().count(), 1, "{err}");
    let v: serde_json::Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["error"], kind);
    assert!(v["message"].is_string());
}

#[test]
fn exit_codes() {
    assert_error(
        &run(&["lr", "--lam", "3,x", "--mu", "1", "--nu", "1"]),
        1,
        "usage",
    );
    assert_error(
        &run(&["lr", "--lam", "1,2", "--mu", "1", "--nu", "1"]),
        1,
        "usage",
    );
    assert_error(
        &run(&["howe", "--m", "2", "--n", "2", "--bogus"]),
        1,
        "usage",
    );
    assert_error(&run(&["frobnicate"]), 1, "usage");
    assert_error(
        &run(&["socle", "--a", "1", "--d2", "1", "--layer", "5"]),
        1,
        "domain",
    );
    assert_error(&run(&["straighten", "--word", "(1,2),(2"]), 1, "parse");
    assert_error(
        &run(&[
            "cauchy-verify",
            "--kind",
            "X-Y",
            "--k",
            "1",
            "--degree",
            "2",
        ]),
        1,
        "parse",
    );
    assert_error(
        &run_with_budget(&["howe", "--m", "3", "--n", "3"], "100"),
        3,
        "budget",
    );
    assert_error(
        &run_with_budget(&["lr", "--lam", "1", "--mu", "1", "--nu", ""], "lots"),
        1,
        "parse",
    );
    assert_error(
        &run_with_budget(
            &[
                "cauchy-verify",
                "--kind",
                "E-E",
                "--k",
                "3",
                "--degree",
                "6",
            ],
            "10",
        ),
        3,
        "budget",
    );
    assert!(run(&["--help"]).status.success());
}
