//! End-to-end tests of the `lr-crystals` binary.

use std::io::Write as _;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lr-crystals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn coeff_all_methods_agree() {
    let out = run(&[
        "coeff", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--method", "all",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("crystal 2"), "{text}");
    assert!(text.contains("pictures 2"), "{text}");
    assert!(text.contains("ballot 2"), "{text}");
    assert!(text.contains("agree true"), "{text}");
}

#[test]
fn coeff_single_method_prints_the_number() {
    let out = run(&[
        "coeff", "--lambda", "", "--mu", "1", "--nu", "1", "--method", "ballot",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn coeff_of_the_empty_triple_is_one() {
    let out = run(&[
        "coeff", "--lambda", "", "--mu", "", "--nu", "", "--method", "all",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ballot 1") && text.contains("crystal 1") && text.contains("pictures 1"));
    assert!(text.contains("agree true"));
}

#[test]
fn coeff_incompatible_triple_is_zero_everywhere() {
    let out = run(&[
        "coeff", "--lambda", "1", "--mu", "1", "--nu", "3", "--method", "all",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("ballot 0"), "{text}");
    assert!(text.contains("crystal 0"), "{text}");
    assert!(text.contains("pictures 0"), "{text}");
    assert!(text.contains("agree true"), "{text}");
}

#[test]
fn coeff_json_output() {
    let out = run(&[
        "coeff", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1", "--method", "all", "--json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["lambda"], serde_json::json!([2, 1]));
    assert_eq!(value["coefficients"]["crystal"], 2);
    assert_eq!(value["coefficients"]["pictures"], 2);
    assert_eq!(value["coefficients"]["ballot"], 2);
    assert_eq!(value["agree"], true);
}

#[test]
fn enumerate_crystal_streams_json_lines() {
    let out = run(&[
        "enumerate",
        "crystal",
        "--lambda",
        "1",
        "--mu",
        "1",
        "--nu",
        "2",
        "--order",
        "J",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "[[1]]\n{\"count\":1}\n");
}

#[test]
fn enumerate_pictures_streams_maps() {
    let out = run(&[
        "enumerate",
        "pictures",
        "--lambda",
        "1",
        "--mu",
        "1",
        "--nu",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    let picture: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(picture["map"], serde_json::json!([[[1, 1], [1, 2]]]));
    assert_eq!(lines.next().unwrap(), "{\"count\":1}");
}

#[test]
fn enumerate_pictures_can_be_empty() {
    let out = run(&[
        "enumerate",
        "pictures",
        "--mu",
        "1,1",
        "--lambda",
        "",
        "--nu",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"count\":0}\n");
}

#[test]
fn enumerate_pictures_via_crystal_matches_search() {
    let direct = run(&[
        "enumerate",
        "pictures",
        "--lambda",
        "2,1",
        "--mu",
        "2,1",
        "--nu",
        "3,2,1",
    ]);
    let via = run(&[
        "enumerate",
        "pictures",
        "--lambda",
        "2,1",
        "--mu",
        "2,1",
        "--nu",
        "3,2,1",
        "--via-crystal",
    ]);
    assert!(direct.status.success() && via.status.success());
    let (direct, via) = (stdout(&direct), stdout(&via));
    let mut a: Vec<&str> = direct.lines().collect();
    let mut b: Vec<&str> = via.lines().collect();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
}

#[test]
fn orders_lists_admissible_orders() {
    let out = run(&["orders", "--shape", "2,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,2 1,1 2,2 2,1\n1,2 2,2 1,1 2,1\n");

    let out = run(&["orders", "--shape", "2,2", "--json"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().last().unwrap().contains("\"count\":2"));

    let skew = run(&["orders", "--shape", "2,1/1"]);
    assert!(skew.status.success());
    assert_eq!(stdout(&skew), "1,2 2,1\n");
}

#[test]
fn orders_cap_is_a_resource_error() {
    let out = run(&["orders", "--shape", "2,2", "--cap", "1"]);
    assert!(!out.status.success());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"), "{}", stderr(&out));
}

#[test]
fn order_files_are_validated() {
    let dir = tempfile::tempdir().unwrap();

    // Row-major on (2,1) is not admissible: (1,2) must precede (1,1).
    let bad = dir.path().join("bad.order");
    writeln!(std::fs::File::create(&bad).unwrap(), "1,1\n1,2\n2,1").unwrap();
    let out = run(&[
        "enumerate",
        "crystal",
        "--lambda",
        "1",
        "--mu",
        "2,1",
        "--nu",
        "3,1",
        "--order",
        &format!("@{}", bad.display()),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("not admissible"), "{err}");
    assert!(err.contains("(1,2)") && err.contains("(1,1)"), "{err}");

    // Wrong domain.
    let wrong = dir.path().join("wrong.order");
    writeln!(std::fs::File::create(&wrong).unwrap(), "1,1\n1,2").unwrap();
    let out = run(&[
        "enumerate",
        "crystal",
        "--lambda",
        "1",
        "--mu",
        "2,1",
        "--nu",
        "3,1",
        "--order",
        &format!("@{}", wrong.display()),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("domain"), "{}", stderr(&out));

    // A valid order file gives the same crystal as the built-in J order.
    let good = dir.path().join("good.order");
    writeln!(std::fs::File::create(&good).unwrap(), "1,2\n1,1\n2,1").unwrap();
    let from_file = run(&[
        "enumerate",
        "crystal",
        "--lambda",
        "1",
        "--mu",
        "2,1",
        "--nu",
        "3,1",
        "--order",
        &format!("@{}", good.display()),
    ]);
    assert!(from_file.status.success(), "{}", stderr(&from_file));
    let builtin = run(&[
        "enumerate",
        "crystal",
        "--lambda",
        "1",
        "--mu",
        "2,1",
        "--nu",
        "3,1",
    ]);
    assert_eq!(stdout(&from_file), stdout(&builtin));
}

#[test]
fn verify_small_budgets_pass() {
    let out = run(&["verify", "theorem36", "--max-entry", "2", "--max-size", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("summary:"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");

    let out = run(&["verify", "bijection", "--max-nu", "4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failed"));

    let out = run(&[
        "verify",
        "order-independence",
        "--max-mu",
        "3",
        "--max-nu",
        "4",
        "--json",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["summary"]["failed"], 0);
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(
        checks.len(),
        report["summary"]["passed"].as_u64().unwrap() as usize
    );
}

#[test]
fn verify_output_is_reproducible() {
    let first = run(&["verify", "bijection", "--max-nu", "4"]);
    let second = run(&["verify", "bijection", "--max-nu", "4"]);
    assert!(first.status.success() && second.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_budget_overflow_emits_nothing() {
    let out = run(&["verify", "bijection", "--max-nu", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(stderr(&out).contains("cap"), "{}", stderr(&out));
}

#[test]
fn verify_budgets_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lr-crystals"))
        .args(["verify", "bijection"])
        .env("LR_CRYSTALS_MAX_NU", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("|nu| <= 3"), "{text}");
}

#[test]
fn usage_errors_name_the_bad_flag() {
    let out = run(&["coeff", "--lambda", "1,2", "--mu", "1", "--nu", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--lambda"), "{}", stderr(&out));

    let out = run(&[
        "coeff", "--lambda", "1", "--mu", "1", "--nu", "2", "--method", "bogus",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--method"), "{}", stderr(&out));
}
