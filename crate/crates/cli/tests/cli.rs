use std::process::Command;

use proptest::prelude::*;
use riordan_lab::fixtures::MatrixFixture;
use riordan_lab::format::{matrix_from_json, matrix_to_text};
use riordan_lab::rational::int;
use riordan_lab_cli::expr::{eval, parse_series, Expr};
use riordan_lab_cli::run;

const BIN: &str = env!("CARGO_BIN_EXE_riordan-lab");

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("riordan-lab").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const FAMILIES: [(&str, &str, MatrixFixture); 3] = [
    ("geom", "1/(1-x)", MatrixFixture::RGeom),
    ("one_plus_x", "1+x", MatrixFixture::ROnePlusX),
    ("catalan", "catalan", MatrixFixture::RCatalan),
];

fn golden(name: &str, ext: &str) -> String {
    let path = format!("{}/tests/golden/bcomp_{name}.{ext}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn family_matrices_match_golden_files() {
    for (name, b, fixture) in FAMILIES {
        for (format, ext) in [("text", "txt"), ("csv", "csv"), ("json", "json")] {
            let (code, out, _) = cli(&["bcomp", "matrix", "--b", b, "--order", "10", "--format", format]);
            assert_eq!(code, 0);
            assert_eq!(out, golden(name, ext), "{name} {format}");
        }
        // the golden files themselves hold the printed matrices
        let printed = fixture.load();
        assert_eq!(matrix_from_json(&golden(name, "json")).unwrap(), printed);
        assert_eq!(golden(name, "txt"), matrix_to_text(&printed));
        let csv_rows: Vec<Vec<String>> =
            golden(name, "csv").lines().map(|l| l.split(',').map(String::from).collect()).collect();
        assert_eq!(csv_rows.len(), printed.size());
        for (n, row) in csv_rows.iter().enumerate() {
            for (m, cell) in row.iter().enumerate() {
                assert_eq!(*cell, format!("{}/1", printed.get(n, m)), "{name} ({n},{m})");
            }
        }
    }
}

/// One expression per line.
fn corpus() -> Vec<String> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus.txt")).unwrap();
    text.lines().map(String::from).collect()
}

const RNA: &str = "(1 - x + x^2 - sqrt((1 - x + x^2)^2 - 4*x^2))/(2*x^2)";

#[test]
fn parser_corpus_round_trips() {
    let corpus = corpus();
    assert_eq!(corpus.len(), 50);
    for text in &corpus {
        let e = parse_series(text).unwrap_or_else(|err| panic!("{text}: {err}"));
        let printed = e.to_string();
        assert_eq!(parse_series(&printed).unwrap(), e, "{text} printed as {printed}");
        assert_eq!(parse_series(&printed).unwrap().to_string(), printed, "printing is stable");
        assert_eq!(eval(&parse_series(&printed).unwrap(), 8), eval(&e, 8), "{text}");
    }
}

#[test]
fn spot_values() {
    let ones = eval(&parse_series("1/(1-x)").unwrap(), 4).unwrap();
    assert_eq!(ones.coeffs(), &[int(1), int(1), int(1), int(1), int(1)]);
    let rna = eval(&parse_series(RNA).unwrap(), 6).unwrap();
    assert_eq!(rna.coeffs(), &[1, 1, 1, 2, 4, 8, 17].map(int));
    assert_eq!(parse_series("x^2^3").unwrap(), Expr::Pow(Box::new(Expr::X), int(8)));
}

fn expr() -> impl Strategy<Value = String> {
    let leaf = prop::sample::select(vec!["x", "1", "2", "catalan", "geom", "one_plus_x"]).prop_map(String::from);
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone(), prop::sample::select(vec!["+", "-", "*"])).prop_map(|(a, b, op)| format!("{a} {op} {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            inner.clone().prop_map(|a| format!("-{a}")),
            (inner.clone(), 0u32..4).prop_map(|(a, k)| format!("({a})^{k}")),
            inner.prop_map(|a| format!("exp(x*({a}))")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generated_expressions_round_trip(text in expr()) {
        let e = parse_series(&text).unwrap();
        prop_assert_eq!(parse_series(&e.to_string()).unwrap(), e);
    }
}

#[test]
fn exit_code_contract() {
    let status = |args: &[&str]| Command::new(BIN).args(args).env_remove("RIORDAN_LAB_ORDER").output().unwrap();
    let ok = status(&["verify", "theorem9", "--order", "12"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("10/10 checks passed"));
    // the product identities of the alpha/beta suite do not hold exactly
    let failed = status(&["verify", "alphabeta", "--order", "8"]);
    assert_eq!(failed.status.code(), Some(1));
    let parse = status(&["series", "eval", "1 + * x"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("byte 4"));
    assert_eq!(status(&["bcomp", "matrix"]).status.code(), Some(2));
    assert_eq!(status(&["series", "eval", "1/x"]).status.code(), Some(3));
    assert_eq!(status(&["bseq", "extract", "--g", "1 + 2*x"]).status.code(), Some(3));
    assert_eq!(status(&["alphabeta", "expand", "--g", "1 + x"]).status.code(), Some(3));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}

#[test]
fn order_from_environment() {
    let out = Command::new(BIN).args(["series", "eval", "geom"]).env("RIORDAN_LAB_ORDER", "3").output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 1 1 1\n");
    let out = Command::new(BIN).args(["series", "eval", "geom", "--order", "2"]).env("RIORDAN_LAB_ORDER", "3").output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 1 1\n");
    let out = Command::new(BIN).args(["series", "eval", "geom"]).env_remove("RIORDAN_LAB_ORDER").output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().split(' ').count(), 17);
}

#[test]
fn json_output_reparses() {
    let (_, out, _) = cli(&["riordan", "build", "--f", "catalan", "--g", "catalan^2", "--order", "9", "--format", "json"]);
    let m = matrix_from_json(&out).unwrap();
    let (_, again, _) = cli(&["riordan", "build", "--f", "catalan", "--g", "catalan^2", "--order", "9", "--format", "text"]);
    assert_eq!(matrix_to_text(&m), again);
    let (_, out, _) = cli(&["flow", "log", "--g", "1/(1-x)^(1/2)", "--order", "6", "--format", "json"]);
    let (_, text, _) = cli(&["flow", "log", "--g", "1/(1-x)^(1/2)", "--order", "6"]);
    assert_eq!(matrix_to_text(&matrix_from_json(&out).unwrap()), text);
}

#[test]
fn other_verbs() {
    // RNA series: B-sequence 1, 1, 1, ...
    let (code, out, _) = cli(&["bseq", "extract", "--g", RNA, "--order", "11"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 1 1 1 1 1\n");
    let (_, out, _) = cli(&["bexp", "poly", "--b", "geom", "--n", "3", "--format", "json"]);
    // [x^3] g^phi with g = 1 + x + x^2 + 2x^3 + ...
    assert_eq!(out, "[\"0/1\",\"4/3\",\"1/2\",\"1/6\"]\n");
    let (_, out, _) = cli(&["bexp", "poly", "--b", "geom", "--n", "3", "--phi", "2"]);
    assert_eq!(out, "6\n");
    let (_, out, _) = cli(&["alphabeta", "expand", "--g", "x/(1-x)", "--order", "4"]);
    assert_eq!(out.lines().next(), Some("alpha_1 = 1"));
    let (_, plain, _) = cli(&["bcomp", "matrix", "--b", "geom", "--order", "6"]);
    let (_, unit, _) = cli(&["bcomp", "matrix", "--b", "geom", "--order", "6", "--beta", "1"]);
    assert_eq!(plain, unit);
}
