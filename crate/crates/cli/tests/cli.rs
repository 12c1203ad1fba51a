//! End-to-end tests of the latticelab binary: output formats, exit codes,
//! and determinism across runs and worker counts.

use std::io::Write;
use std::process::{Command, Output};

fn latticelab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latticelab"))
        .args(args)
        .env_remove("LATTICELAB_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn subcount_named_groups() {
    let out = latticelab(&["subcount", "A5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Sub = 59\n");

    let out = latticelab(&["subcount", "SL(2,5)"]);
    assert_eq!(stdout(&out), "Sub = 76\n");

    let out = latticelab(&["subcount", "gid(81,10)"]);
    assert_eq!(stdout(&out), "Sub = 23\n");

    let out = latticelab(&["--json", "subcount", "C6"]);
    assert_eq!(stdout(&out), "{\"order\":6,\"sub\":4}\n");
}

#[test]
fn props_reports() {
    let out = latticelab(&["props", "A5"]);
    let text = stdout(&out);
    assert!(text.contains("order: 60"));
    assert!(text.contains("sub: 59"));
    assert!(text.contains("solvable: false"));
    assert!(text.contains("perfect: true"));

    let out = latticelab(&["--json", "props", "Dic8"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["sub"], 6);
    assert_eq!(v["nilpotent"], true);
    assert_eq!(v["cyclic"], false);
    for key in [
        "order",
        "sub",
        "cyclic",
        "abelian",
        "nilpotent",
        "supersolvable",
        "solvable",
        "perfect",
        "lagrangian",
    ] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
}

#[test]
fn lattice_listing_and_histogram() {
    let out = latticelab(&["lattice", "S3"]);
    let text = stdout(&out);
    assert!(text.starts_with("Sub = 6\n"));
    assert!(text.contains("#0 order=1 normal=true members=0"));
    assert!(text.lines().count() == 7);

    let out = latticelab(&["lattice", "S3", "--orders-only"]);
    assert_eq!(
        stdout(&out),
        "order 1: 1\norder 2: 3\norder 3: 1\norder 6: 1\n"
    );
}

#[test]
fn sylow_and_hall() {
    let out = latticelab(&["sylow", "S3", "-p", "2"]);
    let text = stdout(&out);
    assert!(text.starts_with("n_2 = 3\n"));

    let out = latticelab(&["sylow", "S3", "-p", "3"]);
    assert!(stdout(&out).starts_with("n_3 = 1\n"));

    let out = latticelab(&["hall", "A4", "--primes", "2"]);
    let text = stdout(&out);
    assert!(text.starts_with("hall(2) count = 1\n"));
    assert!(text.contains("order=4"));

    let out = latticelab(&["hall", "C6", "--primes", "2,3"]);
    assert!(stdout(&out).contains("order=6"));

    // non-prime arguments are domain errors, not panics
    let out = latticelab(&["sylow", "S3", "-p", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = latticelab(&["hall", "C6", "--primes", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn comaximal_stats_and_dot() {
    let out = latticelab(&["comaximal", "C6", "--alpha", "--dot", "-"]);
    let text = stdout(&out);
    assert!(text.contains("order = 2\nsize = 1\ndegrees = 1,1\nalpha = 1\n"));
    assert!(text.contains("graph comaximal {"));
    assert!(text.contains("\"order-2#0\" -- \"order-3#0\";"));

    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("gamma.dot");
    let out = latticelab(&["comaximal", "A4", "--dot", dot_path.to_str().unwrap()]);
    assert!(out.status.success());
    let first = std::fs::read_to_string(&dot_path).unwrap();
    latticelab(&["comaximal", "A4", "--dot", dot_path.to_str().unwrap()]);
    let second = std::fs::read_to_string(&dot_path).unwrap();
    assert_eq!(first, second, "DOT output is byte-stable");

    let out = latticelab(&["comaximal", "C2 x C2", "--csv", "-"]);
    assert!(stdout(&out).contains("0,1\n0,2\n1,2\n"));
}

#[test]
fn alpha_is_capped_on_large_graphs() {
    let out = latticelab(&["comaximal", "A5", "--alpha"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("57 vertices"));
}

#[test]
fn parse_errors_exit_one() {
    let out = latticelab(&["subcount", "C4 y C2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 3"));

    let out = latticelab(&["subcount", "gid(5000,1)"]);
    assert_eq!(out.status.code(), Some(1));

    // unknown flags are rejected as usage errors
    let out = latticelab(&["subcount", "A5", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cap_is_configurable() {
    let out = latticelab(&["--cap", "30", "subcount", "A5"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap"));

    let out = latticelab(&["--cap", "60", "subcount", "A5"]);
    assert!(out.status.success());
}

#[test]
fn table1_all_rows_pass() {
    let out = latticelab(&["table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 36);
    assert_eq!(text.matches("FAIL").count(), 0);
    assert!(text.contains("table1: 36 instantiations, 0 failed"));
}

#[test]
fn figure1_has_no_conflicts() {
    let out = latticelab(&["figure1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("n=59 figure=non-solvable observed=non-solvable verdict=AGREE"));
    assert!(text.contains("n=76 figure=non-solvable observed=non-solvable verdict=AGREE"));
    assert!(text.contains(" 0 conflict"));
    assert!(!text.contains("CONFLICT"));
}

#[test]
fn verify_23_passes_on_bundled_catalog() {
    let out = latticelab(&["verify-23"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("gid(256,538) found=true sub=23 nilpotent=true prime-power=true OK"));
    assert!(text.trim_end().ends_with("verify-23: OK"));
}

#[test]
fn verify_23_fails_on_insufficient_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("thin.cat");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "order 12 id 3 deg 4 sub 10 : (1,2,3) ; (2,3,4)").unwrap();
    drop(f);
    let out = latticelab(&["verify-23", "--catalog", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("verify-23: FAILED"));
}

#[test]
fn scan_is_deterministic_across_jobs() {
    let one = latticelab(&["scan", "--jobs", "1"]);
    let eight = latticelab(&["scan", "--jobs", "8"]);
    assert!(one.status.success());
    assert_eq!(
        one.stdout, eight.stdout,
        "identical bytes regardless of --jobs"
    );
    let text = stdout(&one);
    assert!(text.contains("n=59 class=non-solvable bound=360"));

    let json = latticelab(&["--json", "scan", "--for-n", "10"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(v["n"], 10);
    assert_eq!(v["class"], "solvable");
    assert_eq!(v["bound"], 360);
    assert!(v["witnesses"]
        .as_array()
        .unwrap()
        .contains(&serde_json::json!("gid(12,3):supersolvable")));
}

#[test]
fn scan_reads_external_catalogs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("user.cat");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "# user catalog").unwrap();
    writeln!(
        f,
        "order 14 id 1 deg 7 sub 10 : (1,2,3,4,5,6,7) ; (2,7)(3,6)(4,5)"
    )
    .unwrap();
    drop(f);
    let out = latticelab(&["scan", "--catalog", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n=10 class=supersolvable bound=360 witnesses=gid(14,1):cyclic,gid(14,1):abelian,gid(14,1):nilpotent\n"
    );

    // a bad catalog is a domain error
    let bad = dir.path().join("bad.cat");
    std::fs::write(&bad, "order 6 id 1 deg 3 sub 7 : (1,2) ; (1,2,3)\n").unwrap();
    let out = latticelab(&["scan", "--catalog", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn max_order_precedence() {
    // flag wins over environment, environment wins over the default
    let env_only = Command::new(env!("CARGO_BIN_EXE_latticelab"))
        .args(["scan", "--for-n", "59"])
        .env("LATTICELAB_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert!(stdout(&env_only).contains("class=vacuous bound=50"));

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_latticelab"))
        .args(["scan", "--for-n", "59", "--max-order", "100"])
        .env("LATTICELAB_MAX_ORDER", "50")
        .output()
        .unwrap();
    assert!(stdout(&flag_wins).contains("class=non-solvable bound=100"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["props", "SL(2,3)"],
        vec!["lattice", "D4"],
        vec!["figure1"],
        vec!["table1"],
    ] {
        let a = latticelab(&args);
        let b = latticelab(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
