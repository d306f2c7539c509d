use std::fs;
use std::process::Command;

use jumpfa::cli::run;

/// Runs the CLI in-process; returns (exit code, stdout, stderr).
fn jumpfa(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jumpfa").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("jumpfa-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn membership_verdicts() {
    assert_eq!(
        jumpfa(&["member", "dyck-grl.jfa", "aabb"]),
        (0, "accept\n".into(), String::new())
    );
    assert_eq!(
        jumpfa(&["member", "dyck-grl.jfa", "abba"]),
        (1, "reject\n".into(), String::new())
    );
    assert_eq!(jumpfa(&["member", "dyck-gll", "<eps>"]).0, 0);
}

#[test]
fn trace_of_bab() {
    let (code, out, _) = jumpfa(&["trace", "exrl.jfa", "bab"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "<eps> | q0 | bab  -- consume(q0,a,q0 skip=b)\n\
         b | q0 | b  -- return\n\
         <eps> | q0 | bb  -- consume(q0,bb,q1 skip=<eps>)\n\
         <eps> | q1 | <eps>\n"
    );
    assert_eq!(
        jumpfa(&["trace", "exrl.jfa", "bba"]),
        (1, "reject\n".into(), String::new())
    );
}

#[test]
fn enumerate_is_deterministic() {
    let first = jumpfa(&["enumerate", "dc-gll", "--max-len", "5"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, "c\nabc\naabbc\nababc\n");
    for _ in 0..3 {
        assert_eq!(jumpfa(&["enumerate", "dc-gll", "--max-len", "5"]), first);
    }
}

#[test]
fn reverse_prints_canonical_text() {
    let (code, out, _) = jumpfa(&["reverse", "exrl"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "kind: gll\nalphabet: ab\nstates: q0 q1\nstart: q0\nfinal: q1\nrule: q0 a q0\nrule: q0 bb q1\n"
    );
    let path = temp_file("rev.jfa", &out);
    assert_eq!(
        jumpfa(&["compare", &path, "exrl-gll", "--max-len", "7"]).0,
        0
    );
}

#[test]
fn lba_report() {
    assert_eq!(
        jumpfa(&["lba", "dyck-grl", "aabb"]),
        (
            0,
            "accept\ncells=6 compactions=2 steps=3\n".into(),
            String::new()
        )
    );
    let (code, _, err) = jumpfa(&["lba", "dyck-gll", "ab"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error: "));
}

#[test]
fn compare_against_files_and_oracles() {
    assert_eq!(
        jumpfa(&["compare", "dyck-grl", "--oracle", "dyck", "--max-len", "8"]),
        (0, "equivalent up to length 8\n".into(), String::new())
    );
    assert_eq!(
        jumpfa(&["compare", "exrl", "exrl-gll", "--max-len", "3"]),
        (
            1,
            "abb accept reject\nbba reject accept\n".into(),
            String::new()
        )
    );
    assert_eq!(
        jumpfa(&[
            "compare",
            "dyck-grl",
            "--oracle",
            "dyck_c",
            "--max-len",
            "3"
        ])
        .0,
        2
    );
    assert_eq!(jumpfa(&["compare", "dyck-grl", "--max-len", "3"]).0, 2);
}

#[test]
fn oracle_and_examples() {
    assert_eq!(jumpfa(&["oracle", "anbn", "aabb"]).0, 0);
    assert_eq!(jumpfa(&["oracle", "anbn", "abab"]).0, 1);
    assert_eq!(jumpfa(&["oracle", "nope", "a"]).0, 2);
    let (code, out, _) = jumpfa(&["examples"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().any(|l| l == "nonrowj-grl"));
}

#[test]
fn errors_exit_two_with_one_line() {
    let bad = temp_file(
        "bad.jfa",
        "kind: grl\nalphabet: ab\nstates: q0\nrule: q0 ab q1\n",
    );
    for args in [
        vec!["validate", bad.as_str()],
        vec!["member", "dyck-grl", "abc"],
        vec!["member", "no-such-file.jfa", "a"],
        vec!["enumerate", "dyck-grl"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = jumpfa(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
    let (_, _, err) = jumpfa(&["validate", &bad]);
    assert!(
        err.contains("no start state") && err.contains("q1"),
        "{err}"
    );
}

#[test]
fn validate_reads_files_from_disk() {
    let good = temp_file(
        "good.jfa",
        "# comment\nkind: gll\nalphabet: ab\nstates: s\nstart: s\nfinal: s\nrule: s ab s\n",
    );
    assert_eq!(
        jumpfa(&["validate", &good]),
        (
            0,
            "valid gll automaton: 1 states, 1 rules\n".into(),
            String::new()
        )
    );
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_jumpfa");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["member", "dyck-grl.jfa", "aabb"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "accept\n");
    assert_eq!(
        status(&["member", "dyck-grl.jfa", "abba"]).status.code(),
        Some(1)
    );
    let bad = status(&["member", "dyck-grl.jfa"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&bad.stderr).lines().count(), 1);
}
