//! End-to-end tests of the `fixlab` binary: verb wiring, the exit-code
//! contract, JSON/quiet output modes, and document round-trips.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use fixlab_core::{emit_json, parse_document, GeneratorConfig, ReplaySpec};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_fixlab")
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(bin());
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin is piped")
        .write_all(stdin.unwrap_or("").as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn family_document() -> String {
    let out = run(&["example", "--n", "4", "--M", "10", "--emit"], None);
    assert_eq!(code(&out), 0);
    stdout(&out)
}

#[test]
fn classify_pipeline_reproduces_the_worked_coefficients() {
    let doc = family_document();

    let member = run(&["classify", "--class", "npk", "--n", "4"], Some(&doc));
    assert_eq!(code(&member), 0);
    assert!(stdout(&member).contains("5/12"));

    let non_member = run(&["classify", "--class", "npk", "--n", "3"], Some(&doc));
    assert_eq!(code(&non_member), 1);
    let text = stdout(&non_member);
    assert!(text.contains("member           false"));
    assert!(text.contains("x1 x2 x3"));
}

#[test]
fn emitted_document_round_trips_byte_identically() {
    let doc = family_document();
    let (space, map) = parse_document(&doc).expect("emitted document parses");
    assert_eq!(emit_json(&space, map.as_ref()), doc);
}

#[test]
fn quiet_mode_prints_coefficient_and_verdict_only() {
    let doc = family_document();
    let out = run(
        &["classify", "--class", "npk", "--n", "4", "--quiet"],
        Some(&doc),
    );
    assert_eq!(stdout(&out), "5/12 member\n");
}

#[test]
fn json_report_carries_exact_rationals() {
    let doc = family_document();
    let out = run(
        &["classify", "--class", "npk", "--n", "4", "--json"],
        Some(&doc),
    );
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(value["min_coefficient"], "5/12");
    assert_eq!(value["bound"], "3/4");
    assert_eq!(value["member"], true);
    assert_eq!(value["class"], "npk(4)");
    assert_eq!(value["witness"].as_array().expect("witness array").len(), 4);
}

#[test]
fn machine_output_stays_json_on_input_errors() {
    let out = run(
        &["classify", "--class", "npk", "--json"],
        Some("not a document"),
    );
    assert_eq!(code(&out), 2);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert!(value["error"].is_string());
}

#[test]
fn validate_reports_triangle_violations_with_exit_2() {
    let csv = "point,a,b,c\na,0,1,5\nb,1,0,1\nc,5,1,0\n";
    let out = run(&["validate"], Some(csv));
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("triangle"));
}

#[test]
fn csv_import_accepts_a_valid_metric() {
    let csv = "point,a,b,c\na,0,1,2\nb,1,0,1\nc,2,1,0\n";
    let out = run(&["validate", "--quiet"], Some(csv));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "valid\n");
}

#[test]
fn exit_codes_follow_the_contract_on_malformed_inputs() {
    let asymmetric = r#"{"points":["a","b"],"dist":[["0","1"],["2","0"]]}"#;
    let negative = r#"{"points":["a","b"],"dist":[["0","-1"],["-1","0"]]}"#;
    let nonsquare = r#"{"points":["a","b"],"dist":[["0","1"]]}"#;
    let decimal = r#"{"points":["a","b"],"dist":[["0","0.5"],["0.5","0"]]}"#;
    let unknown_image =
        r#"{"points":["a","b"],"dist":[["0","1"],["1","0"]],"map":[["a","z"],["b","a"]]}"#;
    let duplicate_entry =
        r#"{"points":["a","b"],"dist":[["0","1"],["1","0"]],"map":[["a","a"],["a","b"]]}"#;
    let incomplete_map = r#"{"points":["a","b"],"dist":[["0","1"],["1","0"]],"map":[["a","a"]]}"#;
    let no_map = r#"{"points":["a","b"],"dist":[["0","1"],["1","0"]]}"#;

    let cases: Vec<(&str, Vec<&str>, &str)> = vec![
        (
            "garbage document",
            vec!["validate"],
            "not a document at all",
        ),
        ("asymmetric matrix", vec!["validate"], asymmetric),
        ("negative entry", vec!["validate"], negative),
        ("non-square matrix", vec!["validate"], nonsquare),
        ("decimal rational", vec!["validate"], decimal),
        ("unknown map image", vec!["validate"], unknown_image),
        ("duplicate map entry", vec!["validate"], duplicate_entry),
        ("incomplete map", vec!["validate"], incomplete_map),
        (
            "classify without map",
            vec!["classify", "--class", "npk"],
            no_map,
        ),
        (
            "iterate without map",
            vec!["iterate", "--start", "a"],
            no_map,
        ),
        ("unknown start label", vec!["iterate", "--start", "zz"], ""),
        (
            "zero step budget",
            vec!["iterate", "--start", "x1", "--max-steps", "0"],
            "",
        ),
        (
            "kannan at n=3",
            vec!["classify", "--class", "kannan", "--n", "3"],
            "",
        ),
        (
            "arity above size",
            vec!["classify", "--class", "npk", "--n", "9"],
            "",
        ),
        (
            "family too small",
            vec!["example", "--n", "2", "--M", "5"],
            "",
        ),
        (
            "family scale too small",
            vec!["example", "--n", "4", "--M", "1"],
            "",
        ),
        (
            "campaign without trials",
            vec!["search", "--mode", "campaign"],
            "",
        ),
        (
            "separation without arity",
            vec!["search", "--mode", "separation"],
            "",
        ),
        (
            "replay without spec",
            vec!["search", "--mode", "replay"],
            "",
        ),
        (
            "bad size range",
            vec![
                "search", "--mode", "campaign", "--trials", "5", "--sizes", "x..y",
            ],
            "",
        ),
    ];

    let doc = family_document();
    for (name, args, stdin) in cases {
        let stdin = if stdin.is_empty() {
            doc.as_str()
        } else {
            stdin
        };
        let out = run(&args, Some(stdin));
        assert_eq!(code(&out), 2, "case `{name}` must exit 2");
    }

    let usage = run(&["no-such-verb"], None);
    assert_eq!(code(&usage), 2, "unknown verb must exit 2");
    let flag = run(&["validate", "--no-such-flag"], Some(&doc));
    assert_eq!(code(&flag), 2, "unknown flag must exit 2");
}

#[test]
fn iterate_reports_the_trace_and_certificate_verdicts() {
    let doc = family_document();

    let plain = run(&["iterate", "--start", "x4"], Some(&doc));
    assert_eq!(code(&plain), 0);
    assert!(stdout(&plain).contains("fixed point x3 first reached at step 3"));

    // the coefficient's predicted rate holds at the arity it came from
    let good = run(
        &[
            "iterate",
            "--start",
            "x4",
            "--certify",
            "--lambda",
            "5/12",
            "--n",
            "4",
        ],
        Some(&doc),
    );
    assert_eq!(code(&good), 0);
    assert!(stdout(&good).contains("predicted_decay       true"));

    // at arity 2 the same trace decays slower than any two-point rate:
    // gaps (10, 1, 1, 0) contain a ratio-1 window
    let bad = run(
        &[
            "iterate",
            "--start",
            "x4",
            "--certify",
            "--lambda",
            "1/3",
            "--n",
            "2",
        ],
        Some(&doc),
    );
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("predicted_decay       false"));
}

#[test]
fn worker_count_never_changes_campaign_bytes() {
    let args = |jobs: &'static str| {
        vec![
            "search", "--mode", "campaign", "--trials", "200", "--seed", "9", "--json", "--jobs",
            jobs,
        ]
    };
    let one = run(&args("1"), None);
    let two = run(&args("2"), None);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);

    let mut cmd = Command::new(bin());
    cmd.args([
        "search", "--mode", "campaign", "--trials", "200", "--seed", "9", "--json",
    ])
    .env("FIXLAB_JOBS", "3")
    .stdin(Stdio::null())
    .stdout(Stdio::piped())
    .stderr(Stdio::piped());
    let env_run = cmd.output().expect("binary finishes");
    assert_eq!(env_run.stdout, one.stdout);
}

#[test]
fn replay_spec_files_round_trip_through_the_binary() {
    let spec = ReplaySpec {
        config: GeneratorConfig::range(99, 5),
        n: 3,
    };
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(
        serde_json::to_string(&spec)
            .expect("spec serializes")
            .as_bytes(),
    )
    .expect("temp file writes");
    let path = file.path().to_str().expect("utf-8 temp path");

    let out = run(&["search", "--mode", "replay", "--spec", path], None);
    let report = fixlab_core::replay(&spec).expect("replay succeeds").2;
    let expected = i32::from(!report.all_hold());
    assert_eq!(code(&out), expected);
    assert!(stdout(&out).contains("claims at n = 3"));
}

#[test]
fn separation_json_embeds_the_family_witness() {
    let out = run(
        &["search", "--mode", "separation", "--n", "5", "--json"],
        None,
    );
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    let witness = &value["witnesses"][0];
    assert_eq!(witness["source"]["family"]["n"], 5);
    assert_eq!(witness["member_report"]["member"], true);
    assert_eq!(witness["non_member_report"]["member"], false);
    // the embedded instance is itself a parseable document
    let doc = serde_json::to_string(&witness["instance"]).expect("serializes");
    assert!(parse_document(&doc).expect("instance parses").1.is_some());
}

#[test]
fn files_and_stdin_dash_are_interchangeable() {
    let doc = family_document();
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(doc.as_bytes()).expect("temp file writes");
    let path = file.path().to_str().expect("utf-8 temp path");

    let from_file = run(&["classify", "--class", "tpd", "--n", "4", path], None);
    let from_dash = run(&["classify", "--class", "tpd", "--n", "4", "-"], Some(&doc));
    assert_eq!(code(&from_file), 0);
    assert_eq!(from_file.stdout, from_dash.stdout);
}
