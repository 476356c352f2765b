use std::io::Write;
use std::process::Command;

use dubrovnik::cli::{run, Outcome, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK};
use dubrovnik::{LaurentPoly2, P_4_3_5};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("dubrovnik").chain(args.iter().copied()))
}

fn golden() -> LaurentPoly2 {
    P_4_3_5.trim().parse().unwrap()
}

#[test]
fn closed_engine_prints_golden_polynomial() {
    let out = cli(&["compute", "--tuple", "[4,3,5]", "--engine", "closed", "--format", "plain"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.trim().parse::<LaurentPoly2>().unwrap(), golden());
    assert_eq!(out.stdout, format!("{}\n", golden()));
    assert_eq!(out.stderr, "");
}

#[test]
fn all_engines_report_agreement() {
    let out = cli(&["compute", "--fraction", "3/1", "--engine", "all"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 1);
    assert_eq!(out.stderr, "engines: 3/3 agree\n");
}

#[test]
fn zero_entry_is_an_input_error() {
    let out = cli(&["compute", "--tuple", "[0,2]"]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("entry 1 is zero"), "{}", out.stderr);
    assert_eq!(out.stdout, "");
}

#[test]
fn all_output_equals_each_single_engine() {
    for input in ["[4,3,5]", "[2,2]", "[-3,-1,-2]", "[1,1,1,1,1]", "[7]"] {
        let all = cli(&["compute", "--tuple", input]);
        assert_eq!(all.code, EXIT_OK, "{input}");
        for engine in ["skein", "reduce", "closed"] {
            let one = cli(&["compute", "--tuple", input, "--engine", engine]);
            assert_eq!(one.stdout, all.stdout, "{input} on {engine}");
        }
    }
}

#[test]
fn input_errors() {
    let cases: &[&[&str]] = &[
        &["compute", "--tuple", "[1,x]"],
        &["compute", "--tuple", "[2,-1]"],
        &["compute", "--fraction", "3/0"],
        &["compute", "--fraction", "2/5"],
        &["compute", "--fraction", "[3]"],
        &["compute", "--tuple", "3/1"],
        &["compute", "--tuple", "[3]", "--fraction", "3/1"],
        &["compute", "--tuple", "[3]", "--bogus"],
        &["compute"],
        &["frobnicate"],
        &["compute", "--tuple", "[6000,6000]"],
    ];
    for args in cases {
        let out = cli(args);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let mixed = cli(&["compute", "--tuple", "[2,-1]"]);
    assert!(mixed.stderr.contains("--canonicalize"), "{}", mixed.stderr);
}

#[test]
fn help_and_version_succeed() {
    for args in [&["--help"][..], &["--version"], &["compute", "--help"]] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_OK);
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn canonicalize_and_mirror() {
    let mixed = cli(&["compute", "--tuple", "[3,-2]", "--canonicalize", "--format", "json"]);
    assert_eq!(mixed.code, EXIT_OK, "{}", mixed.stderr);
    let v: Value = serde_json::from_str(&mixed.stdout).unwrap();
    assert_eq!(v["input"], "[3,-2]");
    assert!(v["tuple"].as_array().unwrap().iter().all(|b| b.as_i64().unwrap() > 0));

    let plain = cli(&["compute", "--tuple", "[2,1,3]"]);
    let mirrored = cli(&["compute", "--tuple", "[2,1,3]", "--mirror"]);
    let neg = cli(&["compute", "--tuple", "[-2,-1,-3]"]);
    assert_eq!(mirrored.stdout, neg.stdout);
    let p: LaurentPoly2 = plain.stdout.trim().parse().unwrap();
    assert_eq!(mirrored.stdout.trim().parse::<LaurentPoly2>().unwrap(), p.mirror());
}

#[test]
fn normalize_knots_only() {
    let out = cli(&["compute", "--tuple", "[1,2]", "--normalize"]);
    assert_eq!(out.code, EXIT_OK);
    // [1,2] has fraction 3/2 and 2 = -1 mod 3: the left-handed trefoil.
    let left = cli(&["compute", "--tuple", "[-3]", "--normalize"]);
    let right = cli(&["compute", "--tuple", "[3]", "--normalize"]);
    assert_eq!(out.stdout, left.stdout);
    assert_ne!(out.stdout, right.stdout);
    let link = cli(&["compute", "--tuple", "[2]", "--normalize"]);
    assert_eq!(link.code, EXIT_INPUT);
    assert!(link.stderr.contains("writhe undefined"));
}

#[test]
fn json_metadata() {
    let out = cli(&["compute", "--fraction", "69/16", "--format", "json", "--normalize"]);
    assert_eq!(out.code, EXIT_OK);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["input"], "69/16");
    assert_eq!(v["tuple"], serde_json::json!([4, 3, 5]));
    assert_eq!(v["fraction"], "69/16");
    assert_eq!(v["kind"], "knot");
    assert_eq!(v["engines"], serde_json::json!(["skein", "reduce", "closed"]));
    assert_eq!(v["normalized"], true);
    let w = v["writhe"].as_i64().unwrap();
    let poly = LaurentPoly2::parse(&v["polynomial"].to_string(), dubrovnik::Style::Json).unwrap();
    assert_eq!(poly, golden().shift_a(-w));

    let link = cli(&["compute", "--tuple", "[2,2,2]", "--format", "json"]);
    let v: Value = serde_json::from_str(&link.stdout).unwrap();
    assert_eq!(v["kind"], "link");
    assert!(v.get("writhe").is_none());
}

#[test]
fn latex_output() {
    let out = cli(&["compute", "--tuple", "[-1]", "--format", "latex"]);
    assert_eq!(out.stdout, "a^{-1}\n");
}

#[test]
fn batch_keeps_line_count_and_order() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    let lines = ["# header", "[4,3,5]", "", "3/1", "[0,1]", "[2,-1]", "7/2", "  [1]  "];
    for l in lines {
        writeln!(file, "{l}").unwrap();
    }
    let path = file.path().to_str().unwrap();
    let out = cli(&["compute", "--batch", path]);
    let got: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(got.len(), lines.len());
    assert_eq!(got[0], "# header");
    assert_eq!(got[1], format!("[4,3,5]\t{}", golden()));
    assert_eq!(got[2], "");
    assert!(got[3].starts_with("3/1\t"));
    assert_eq!(got[4], "[0,1]\terror: entry 1 is zero");
    assert!(got[5].starts_with("[2,-1]\terror: "));
    assert!(got[6].starts_with("7/2\t"));
    assert_eq!(got[7], "[1]\ta");
    assert_eq!(out.code, EXIT_INPUT);
    assert_eq!(out.stderr, "2 of 8 lines failed\n");

    let json = cli(&["compute", "--batch", path, "--format", "json"]);
    let records: Vec<Value> = json.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), lines.len());
    assert_eq!(records[0]["skipped"], true);
    assert_eq!(records[4]["error"], "entry 1 is zero");
    assert_eq!(records[6]["fraction"], "7/2");
}

#[test]
fn batch_of_valid_lines_succeeds() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for q in 1..=20 {
        writeln!(file, "41/{q}").unwrap();
    }
    let out = cli(&["compute", "--batch", file.path().to_str().unwrap(), "--canonicalize"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout.lines().count(), 20);
    assert_eq!(out.stderr, "");
    let missing = cli(&["compute", "--batch", "/nonexistent/batch.txt"]);
    assert_eq!(missing.code, EXIT_INPUT);
}

#[test]
fn check_equiv_verdicts() {
    let yes = cli(&["compute", "--check-equiv", "7/2", "7/4"]);
    assert_eq!(
        (yes.code, yes.stdout.as_str()),
        (EXIT_OK, "7/2 and 7/4: equivalent\nnormalized polynomials: agree\n")
    );
    let no = cli(&["compute", "--check-equiv", "3/1", "5/1"]);
    assert_eq!(no.stdout, "3/1 and 5/1: not equivalent\nnormalized polynomials: differ\n");
    let links = cli(&["compute", "--check-equiv", "4/1", "4/5"]);
    assert_eq!(
        links.stdout,
        "4/1 and 4/5: equivalent\nnormalized polynomials: not compared (not both knots)\n"
    );
    let wide = cli(&["compute", "--check-equiv", "5/2", "5/8"]);
    assert_eq!(wide.code, EXIT_OK);
    assert!(wide.stdout.contains(": equivalent\n") && wide.stdout.ends_with("agree\n"), "{}", wide.stdout);
    let bad = cli(&["compute", "--check-equiv", "5/2", "five"]);
    assert_eq!(bad.code, EXIT_INPUT);
    let json = cli(&["compute", "--check-equiv", "5/2", "5/3", "--format", "json"]);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["normalized_polynomials_agree"], true);
}

#[test]
fn selftest_passes_and_detects_bad_fixture() {
    let out = cli(&["selftest"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "skein: ok (58 terms)\nreduce: ok (58 terms)\nclosed: ok (58 terms)\n");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{}", golden() + LaurentPoly2::one()).unwrap();
    let out = cli(&["selftest", "--fixture", file.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_MISMATCH);
    assert_eq!(out.stdout.matches("MISMATCH, computed minus expected = -1").count(), 3);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dubrovnik");
    let ok = Command::new(bin).args(["compute", "--tuple", "[4,3,5]"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), format!("{}\n", golden()));
    assert_eq!(String::from_utf8(ok.stderr).unwrap(), "engines: 3/3 agree\n");
    let bad = Command::new(bin).args(["compute", "--tuple", "[0,2]"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let unknown = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(unknown.status.code(), Some(1));
}
