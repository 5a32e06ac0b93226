use std::path::{Path, PathBuf};

use fourier_codes::cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("fcodes").chain(args.iter().copied()))
}

/// Scratch path unique to this test process.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn field_info_example() {
    let out = cli(&["field-info", "--p", "2", "--n", "7"]);
    assert_eq!(out.code, 0);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "ORDERMOD 3");
    assert_eq!(lines[1], "FIELD 2 3");
    assert_eq!(lines[3], "ORDER 8");
}

#[test]
fn design_block_example_line() {
    let out = cli(&[
        "design", "block", "--rate", "7/8", "--errors", "25", "--type", "dc",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("CODE 400 350 51 DC FIELD 401 1"));
}

#[test]
fn empty_argv_exits_two() {
    let out = run(["fcodes"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn outputs_are_byte_reproducible() {
    let commands: [&[&str]; 4] = [
        &["field-info", "--p", "3", "--n", "10"],
        &[
            "series",
            "--family",
            "prime-fields",
            "--rate",
            "3/4",
            "--count",
            "5",
            "--limits",
        ],
        &["design", "conv", "--n", "15", "--r", "9", "--type", "dc"],
        &["design", "conv-size", "--rate", "15/16", "--free-distance", "61"],
    ];
    for args in commands {
        assert_eq!(cli(args), cli(args), "{args:?}");
    }
}

#[test]
fn series_example_format() {
    let out = cli(&[
        "series",
        "--family",
        "char2-mersenne",
        "--rate",
        "3/4",
        "--type",
        "qecc",
        "--count",
        "3",
    ]);
    assert_eq!(out.code, 0);
    for line in out.stdout.lines() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(toks.len(), 10, "{line}");
        assert_eq!((toks[3], toks[6]), ("FIELD", "QECC"));
    }
}

#[test]
fn design_verify_encode_decode_pipeline() {
    let code = scratch("c10.txt");
    let out = cli(&[
        "design",
        "block",
        "--rate",
        "3/5",
        "--errors",
        "2",
        "--type",
        "mds",
        "--prime-field",
        "--out",
        path(&code),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "CODE 10 6 5 MDS FIELD 11 1\n");

    let verified = scratch("c10v.txt");
    let out = cli(&["verify", path(&code), "--out", path(&verified)]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("DIST 5 exact\nDC true\nLCD false\n"));
    assert!(out.stdout.contains("CODE 10 6 5 MDS mds FIELD 11 1"));

    let msgs = scratch("m.txt");
    std::fs::write(&msgs, "1 1 1 1 1 1\n0 3 0 0 0 7\n").unwrap();
    let out = cli(&["encode", path(&verified), path(&msgs)]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().next(), Some("6 8 1 5 1 0 1 6 1 3"));

    let words = scratch("w.txt");
    std::fs::write(&words, &out.stdout).unwrap();
    let out = cli(&[
        "decode",
        path(&verified),
        path(&words),
        "--inject",
        "2",
        "--seed",
        "11",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1 1 1 1 1 1\n0 3 0 0 0 7\n");
    let again = cli(&[
        "decode",
        path(&verified),
        path(&words),
        "--inject",
        "2",
        "--seed",
        "11",
    ]);
    assert_eq!(out, again);
}

#[test]
fn refuted_claim_exits_one() {
    let code = scratch("dc7.txt");
    let out = cli(&["design", "conv", "--n", "7", "--r", "4", "--out", path(&code)]);
    assert_eq!(out.code, 0);
    let text = std::fs::read_to_string(&code)
        .unwrap()
        .replace("dc=false", "dc=claimed");
    let forged = scratch("dc7-forged.txt");
    std::fs::write(&forged, text).unwrap();
    let out = cli(&["verify", path(&forged)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("DC false"));
    assert_eq!(cli(&["verify", path(&code)]).code, 0);
}

#[test]
fn conv_encode_uses_coefficient_lines() {
    let code = scratch("cv.txt");
    assert_eq!(
        cli(&["design", "conv", "--n", "7", "--r", "4", "--out", path(&code)]).code,
        0
    );
    let msg = scratch("cv-m.txt");
    std::fs::write(&msg, "1,0,0 0,0,0 0,0,0 0,0,0\n").unwrap();
    let out = cli(&["encode", path(&code), path(&msg)]);
    assert_eq!(out.code, 0);
    // One message coefficient and memory 1 give two codeword coefficients.
    assert_eq!(out.stdout.lines().count(), 2);
}

#[test]
fn malformed_inputs_exit_two() {
    let bad = scratch("bad.txt");
    std::fs::write(&bad, "GF 2 3 1 1 0 1\nCODE 7 4 4 DC FIELD 2 3\n").unwrap();
    assert_eq!(cli(&["verify", path(&bad)]).code, 2);
    assert_eq!(cli(&["design", "block", "--rate", "7/8"]).code, 2);
    assert_eq!(cli(&["nope"]).code, 2);
}
