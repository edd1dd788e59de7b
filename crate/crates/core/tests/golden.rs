//! Runs the `braidq` binary and compares stdout with files under `tests/golden/`.
//! Regenerate a file by running the listed command and redirecting stdout.

use std::path::PathBuf;
use std::process::{Command, Output};

fn braidq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidq")).args(args).output().expect("spawn braidq")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

const CASES: &[(&str, &[&str])] = &[
    ("check_ybe", &["check-ybe"]),
    ("braid_run", &["braid-run", "--word", "trefoil", "--input", "01"]),
    ("entangle_bell", &["entangle-test", "--fixture", "bell"]),
    ("entangle_ghz", &["entangle-test", "--fixture", "ghz", "--cut", "1"]),
    ("invariant_hopf_bracket", &["invariant", "--word", "hopf"]),
    ("invariant_hopf_z", &["invariant", "--word", "hopf", "--mode", "z"]),
    ("invariant_hopf_sigma", &["invariant", "--word", "hopf", "--mode", "sigma"]),
    ("invariant_whitehead_zspecial", &["invariant", "--word", "whitehead", "--mode", "zspecial"]),
    (
        "invariant_trefoil_numeric",
        &["invariant", "--word", "trefoil", "--numeric", "--phases", "0.3", "1.1", "2.0", "2.0"],
    ),
    ("relations_3", &["check-relations", "--strands", "3"]),
    ("demo_ghz", &["demo", "ghz"]),
    ("demo_aravind", &["demo", "aravind"]),
    ("demo_lemma", &["demo", "lemma"]),
    ("fixtures", &["fixtures"]),
    ("text_check_ybe", &["--output", "text", "check-ybe"]),
];

#[test]
fn stdout_matches_golden_files() {
    for (name, args) in CASES {
        let out = braidq(args);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(name), "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    for (name, args) in CASES {
        assert_eq!(braidq(args).stdout, braidq(args).stdout, "{name}");
    }
}

#[test]
fn input_errors_exit_with_2() {
    let cases: &[(&[&str], &str)] = &[
        (&["invariant", "--word", "B5; s9"], "index out of range at token 1: 9 not in 1..=4"),
        (&["bogus"], "unrecognized subcommand"),
        (&["check-ybe", "--params", "2,0", "1,0", "1,0", "1,0"], "unit circle"),
        (
            &["entangle-test", "--state", r#"[{"basis":"00","re":1,"im":0},{"basis":"11","re":1,"im":0}]"#],
            "not normalized",
        ),
        (&["braid-run", "--word", "B2; s1", "--input", "011"], ""),
    ];
    for (args, needle) in cases {
        let out = braidq(args);
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {err}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(err.contains(needle), "{args:?}: {err}");
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn word_from_file() {
    let dir = std::env::temp_dir().join(format!("braidq-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hopf.braid");
    std::fs::write(&path, "B2; s1 s1\n").unwrap();
    let out = braidq(&["invariant", "--word", &format!("@{}", path.display())]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("invariant_hopf_bracket"));
}
