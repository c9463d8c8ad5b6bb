use std::fs;
use std::path::Path;

use monofact::commands::{EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};
use monofact::document::{emit_monoid, parse_monoid};
use monofact::run_command;
use monofact_core::catalog;
use monofact_core::map::find_isomorphism;

fn run(args: &[&str]) -> monofact::Outcome {
    run_command(std::iter::once("monofact").chain(args.iter().copied()))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

/// c3.json, c2.json and an inversion action referring to them by path.
fn semidirect_files(dir: &Path) -> (String, String, String) {
    let a = write(dir, "c3.json", &emit_monoid(&catalog::cyclic(3)));
    let b = write(dir, "c2.json", &emit_monoid(&catalog::cyclic(2)));
    let act = write(dir, "inv.json", r#"{"actor":"c2.json","acted":"c3.json","star":[[0,1,2],[0,2,1]]}"#);
    (a, b, act)
}

#[test]
fn info_on_b2_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "b2.json", r#"{"size":2,"identity":0,"table":[[0,1],[1,1]]}"#);
    let out = run(&["info", "--in", &path]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    for line in ["size: 2", "units: 1", "conical: yes", "submonoids: 2"] {
        assert!(out.stdout.lines().any(|l| l == line), "missing {line:?} in\n{}", out.stdout);
    }
}

#[test]
fn fac_lists_s3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "s3.json", &emit_monoid(&catalog::symmetric3()));
    let out = run(&["fac", "--in", &path]);
    assert_eq!(out.code, EXIT_OK);
    let facs = monofact_core::factorization::enumerate_factorizations(&catalog::symmetric3()).unwrap();
    assert_eq!(out.stdout.lines().count(), facs.len() + 1);
    assert_eq!(out.stdout.lines().last().unwrap(), format!("|FAC| = {}", facs.len()));
    for f in &facs {
        assert!(out.stdout.contains(&f.display()));
    }
}

#[test]
fn fac_over_and_strict() {
    let out = run(&["fac", "--in", "@S3", "--first", "(123)"]);
    assert!(out.stdout.ends_with("|FAC({e,(123),(132)}/M)| = 3\n"), "{}", out.stdout);
    let empty = run(&["fac", "--in", "@C4", "--first", "g^2"]);
    assert_eq!(empty.code, EXIT_OK);
    let strict = run(&["--strict", "fac", "--in", "@C4", "--first", "g^2"]);
    assert_eq!(strict.code, EXIT_NEGATIVE);
    assert_eq!(strict.stdout, empty.stdout);
}

#[test]
fn cocycles_and_cohomology() {
    let out = run(&["cocycles", "--in", "@S3", "--sub", "(123)"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("|D| = 3\n"), "{}", out.stdout);
    let pointed = run(&["cocycles", "--in", "@S3", "--sub", "(123)", "--unit-on", "(12)"]);
    assert_eq!(pointed.stdout.matches(" *\n").count(), 1);
    let right = run(&["cocycles", "--in", "@S3", "--sub", "(12)", "--side", "right"]);
    assert!(right.stdout.ends_with("|D| = 1\n"), "{}", right.stdout);
    let classes = run(&["cohomology", "--in", "@S3", "--sub", "(123)", "--unit-on", "(12)"]);
    assert!(classes.stdout.ends_with("|D| = 3, classes = 1\n"), "{}", classes.stdout);
    assert!(classes.stdout.contains("(base)"));
}

#[test]
fn semidirect_emit_is_s3() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, act) = semidirect_files(dir.path());
    let out = run(&["semidirect", "--a", &a, "--b", &b, "--action", &act, "--emit"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let product = parse_monoid(&out.stdout).unwrap();
    assert_eq!(product.size(), 6);
    assert!(find_isomorphism(&product, &catalog::symmetric3()).is_some());
    let summary = run(&["semidirect", "--a", &a, "--b", &b, "--action", &act]);
    assert!(summary.stdout.contains("isomorphic to: S3, C3xiC2"), "{}", summary.stdout);
}

#[test]
fn z1_and_h1() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, act) = semidirect_files(dir.path());
    let z = run(&["z1", "--a", &a, "--b", &b, "--action", &act, "--units"]);
    assert!(z.stdout.ends_with("|Z1| = 3\n"), "{}", z.stdout);
    let h = run(&["--strict", "h1", "--a", &a, "--b", &b, "--action", &act, "--units"]);
    assert_eq!(h.code, EXIT_OK);
    assert!(h.stdout.ends_with("|Z1| = 3, |H1| = 1\n"), "{}", h.stdout);
}

#[test]
fn h1_negative_under_strict() {
    // Trivial action of C2 on C2: H1 = Hom(C2, C2) has two classes.
    let dir = tempfile::tempdir().unwrap();
    let act = write(dir.path(), "t.json", r#"{"actor":"@C2","acted":"@C2","star":[[0,1],[0,1]]}"#);
    let out = run(&["--strict", "h1", "--a", "@C2", "--b", "@C2", "--action", &act]);
    assert_eq!(out.code, EXIT_NEGATIVE);
    assert!(out.stdout.ends_with("|Z1| = 2, |H1| = 2\n"), "{}", out.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
    assert_eq!(run(&["info", "--in", "/nonexistent/m.json"]).code, EXIT_USAGE);
    assert_eq!(run(&["info", "--in", "@NOPE"]).code, EXIT_USAGE);
    assert_eq!(run(&["fac", "--in", "@S3", "--first", "(1234)"]).code, EXIT_USAGE);
    assert_eq!(run(&["verify", "--max-size", "5"]).code, EXIT_USAGE);
    assert_eq!(run(&["witness", "--bound", "0"]).code, EXIT_USAGE);

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"size":2,"identity":0,"table":[[0,1],[1,2]]}"#);
    let out = run(&["info", "--in", &bad]);
    assert_eq!(out.code, EXIT_VALIDATION);
    assert!(out.stderr.contains("outside"), "{}", out.stderr);
    let broken = write(dir.path(), "broken.json", "{\"size\":2,\n \"table\":");
    assert_eq!(run(&["info", "--in", &broken]).code, EXIT_VALIDATION);
    // Associativity broken: rejected before anything runs.
    let nonassoc = write(dir.path(), "na.json", r#"{"size":3,"identity":0,"table":[[0,1,2],[1,0,1],[2,2,0]]}"#);
    assert_eq!(run(&["fac", "--in", &nonassoc]).code, EXIT_VALIDATION);
    // Squaring on C4 is not an action.
    let sq = write(dir.path(), "sq.json", r#"{"actor":"@C2","acted":"@C4","star":[[0,1,2,3],[0,2,0,2]]}"#);
    let out = run(&["semidirect", "--a", "@C4", "--b", "@C2", "--action", &sq]);
    assert_eq!(out.code, EXIT_VALIDATION);
}

#[test]
fn witness_command() {
    let out = run(&["witness", "--bound", "1000"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("48 = 3 * 2^4"));
    assert!(out.stdout.contains("(-7) + 5 = (-3) + 1 = -2"));
}

#[test]
fn verify_small() {
    let out = run(&["verify", "--max-size", "2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.ends_with("checks: 25, passed: 25, failed: 0\n"));
}
