//! End-to-end checks of the binary: golden outputs, serialization
//! shapes, exit codes, byte determinism, and the error paths.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeon-sl2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn states_chart_golden() {
    assert_eq!(
        stdout_of(&["states", "--n", "3", "--ell", "2"]),
        "W\n1,1,1\n0,1,-1\n2,-1,-1\nD\n3,2,6\n"
    );
    assert_eq!(
        stdout_of(&["states", "--n", "3", "--ell", "2", "--format", "json"]),
        "{\"D\":[\"3\",\"2\",\"6\"],\"W\":[[\"1\",\"1\",\"1\"],[\"0\",\"1\",\"-1\"],[\"2\",\"-1\",\"-1\"]],\"ell\":2,\"n\":3}\n"
    );
}

#[test]
fn zbasis_stacks_every_layer() {
    assert_eq!(
        stdout_of(&["zbasis", "--n", "2"]),
        "layer 0\nW\n1\nD\n1\nlayer 1\nW\n1,1\n1,-1\nD\n2,2\nlayer 2\nW\n1\nD\n1\n"
    );
}

#[test]
fn spectrum_golden_rows() {
    assert_eq!(
        stdout_of(&["spectrum", "--n", "4", "--ell", "2", "--k", "1"]),
        "0,4,1\n1,0,3\n2,-2,2\n"
    );
    assert_eq!(
        stdout_of(&["spectrum", "--n", "4", "--ell", "2", "--k", "1", "--labels"]),
        "alpha,lambda,multiplicity\n0,4,1\n1,0,3\n2,-2,2\n"
    );
    assert_eq!(
        stdout_of(&[
            "spectrum", "--n", "4", "--ell", "2", "--k", "1", "--format", "json"
        ]),
        "{\"ell\":2,\"k\":1,\"n\":4,\"rows\":[[0,\"4\",1],[1,\"0\",3],[2,\"-2\",2]]}\n"
    );
}

#[test]
fn poset_pair_pins() {
    assert_eq!(stdout_of(&["poset", "--n", "1", "--kind", "zeta"]), "1,1\n0,1\n");
    assert_eq!(
        stdout_of(&["poset", "--n", "1", "--kind", "moebius"]),
        "1,-1\n0,1\n"
    );
}

#[test]
fn op_matrix_shapes() {
    assert_eq!(stdout_of(&["op-matrix", "--n", "1", "--op", "t"]), "0,0\n1,0\n");
    assert_eq!(
        stdout_of(&["op-matrix", "--n", "1", "--op", "t", "--format", "json"]),
        "{\"n\":1,\"order\":\"graded-lex\",\"rows\":[[\"0\",\"0\"],[\"1\",\"0\"]]}\n"
    );
    assert_eq!(
        stdout_of(&["op-matrix", "--n", "1", "--op", "t", "--labels"]),
        ",\"∅\",\"1\"\n\"∅\",0,0\n\"1\",1,0\n"
    );
    // U = nI − 2L is diagonal with entries n − 2|I|.
    assert_eq!(
        stdout_of(&["op-matrix", "--n", "2", "--op", "u"]),
        "2,0,0,0\n0,0,0,0\n0,0,0,0\n0,0,0,-2\n"
    );
    // The divided power T^0/0! is the identity.
    assert_eq!(
        stdout_of(&["op-matrix", "--n", "1", "--op", "divided-t", "--k", "0"]),
        "1,0\n0,1\n"
    );
}

#[test]
fn krawtchouk_forms() {
    assert_eq!(stdout_of(&["krawtchouk", "--n", "6", "--j", "2"]), "-3,0,1/2\n");
    assert_eq!(
        stdout_of(&["krawtchouk", "--n", "6", "--j", "2", "--format", "json"]),
        "{\"coeffs\":[\"-3\",\"0\",\"1/2\"],\"degree\":2,\"n\":6}\n"
    );
    assert_eq!(
        stdout_of(&["krawtchouk", "--n", "2", "--j", "1", "--form", "matrix"]),
        "0,1,1,0\n1,0,0,1\n1,0,0,1\n0,1,1,0\n"
    );
}

#[test]
fn hadamard_routes_agree() {
    let kronecker = stdout_of(&["hadamard", "--n", "2"]);
    assert_eq!(kronecker, "1,1,1,1\n1,-1,1,-1\n1,1,-1,-1\n1,-1,-1,1\n");
    assert_eq!(stdout_of(&["hadamard", "--n", "2", "--via", "group"]), kronecker);
}

#[test]
fn scheme_matrices() {
    assert_eq!(
        stdout_of(&["scheme", "--n", "2", "--kind", "hamming", "--j", "1"]),
        "0,1,1,0\n1,0,0,1\n1,0,0,1\n0,1,1,0\n"
    );
    // J_1 on the middle layer of n = 2 swaps the two singletons.
    assert_eq!(
        stdout_of(&[
            "scheme", "--n", "2", "--kind", "johnson", "--ell", "1", "--k", "1"
        ]),
        "0,1\n1,0\n"
    );
}

#[test]
fn binary_order_relabels_rows() {
    // The two orders agree through n = 2 and first split at n = 3:
    // graded-lex lists {3} fourth, binary order (mask value) lists {1,2}.
    let labels_graded = stdout_of(&["op-matrix", "--n", "3", "--op", "layer", "--labels"]);
    let labels_binary = stdout_of(&[
        "op-matrix", "--n", "3", "--op", "layer", "--order", "binary", "--labels",
    ]);
    assert!(labels_graded.starts_with(",\"∅\",\"1\",\"2\",\"3\",\"1,2\""));
    assert!(labels_binary.starts_with(",\"∅\",\"1\",\"2\",\"1,2\",\"3\""));
    let graded = stdout_of(&["op-matrix", "--n", "3", "--op", "layer"]);
    let binary = stdout_of(&["op-matrix", "--n", "3", "--op", "layer", "--order", "binary"]);
    let diag = |text: &str| -> Vec<String> {
        text.lines()
            .enumerate()
            .map(|(r, line)| line.split(',').nth(r).expect("square").to_string())
            .collect()
    };
    assert_eq!(diag(&graded), ["0", "1", "1", "1", "2", "2", "2", "3"]);
    assert_eq!(diag(&binary), ["0", "1", "1", "2", "1", "2", "2", "3"]);
}

#[test]
fn byte_determinism_across_runs() {
    let args = ["group", "--n", "5", "--s", "1/2", "--u", "-2/3", "--t", "3"];
    let first = stdout_of(&args);
    let second = stdout_of(&args);
    assert_eq!(first, second);
    assert!(!first.is_empty());
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let path = std::env::temp_dir().join("zeon-sl2-op-u.csv");
    let out = run(&[
        "op-matrix",
        "--n",
        "2",
        "--op",
        "u",
        "--output",
        path.to_str().expect("tmp path is utf8"),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).expect("file written"),
        stdout_of(&["op-matrix", "--n", "2", "--op", "u"])
    );
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_small_sweep_summarizes() {
    let out = run(&["verify", "--n", "2", "--suite", "boolean-core"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("boolean-core/rank-unrank-inverse: pass"));
    assert!(text.contains("suite boolean-core:"));
    assert!(text.ends_with("verify: all 1 suites passed\n"));
}

#[test]
fn argument_errors_exit_two() {
    let cases: &[&[&str]] = &[
        // malformed rational
        &["group", "--n", "2", "--s", "x", "--u", "1", "--t", "1"],
        // missing required flags
        &["group", "--n", "2"],
        // unknown verb
        &["nonsense"],
        // unknown suite
        &["verify", "--n", "2", "--suite", "bogus"],
        // sweep size out of range
        &["verify", "--n", "0"],
        &["verify", "--n", "13"],
        // op parameter mismatches
        &["op-matrix", "--n", "2", "--op", "e-hat"],
        &["op-matrix", "--n", "2", "--op", "t", "--i", "1"],
        // generator index out of range
        &["op-matrix", "--n", "2", "--op", "e-hat", "--i", "3"],
        // scheme parameter mismatches
        &["scheme", "--n", "4", "--kind", "johnson", "--j", "1"],
        &["scheme", "--n", "4", "--kind", "hamming", "--ell", "2"],
        &["scheme", "--n", "4", "--kind", "johnson", "--ell", "2", "--k", "3"],
        // labels without a matrix to label
        &["krawtchouk", "--n", "4", "--j", "1", "--labels"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "one-line diagnostic, got: {err:?}");
        assert!(err.starts_with("error: "), "args: {args:?}, got: {err:?}");
    }
}

#[test]
fn dense_refusal_hints_at_layer_verbs() {
    let out = run(&["hadamard", "--n", "13"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "diagnostic must be one line");
    assert!(err.contains("per-layer"));
}
