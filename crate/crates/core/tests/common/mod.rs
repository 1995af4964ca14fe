#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary from the crate directory so fixture paths stay relative.
pub fn run(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_skelreal"));
    cmd.current_dir(crate_dir())
        .args(args)
        .env_remove("SKELREAL_ORACLE_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// `(golden name, arguments)` for every command on the bundled fixtures.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("weak_realize_fig2", &["weak-realize", "fixtures/fig2.json"]),
    (
        "weak_realize_zero",
        &["weak-realize", "fixtures/zero_degrees.json"],
    ),
    (
        "weak_realize_odd_sum",
        &["weak-realize", "fixtures/odd_sum.json"],
    ),
    (
        "bipartition_k7",
        &["bipartition", "fixtures/fig2.json", "--k", "7"],
    ),
    (
        "bipartition_k6",
        &["bipartition", "fixtures/fig2.json", "--k", "6"],
    ),
    (
        "bipartition_range",
        &["bipartition", "fixtures/fig2.json", "--range"],
    ),
    (
        "unicyclic_triangle",
        &["unicyclic", "fixtures/triangle.json"],
    ),
    (
        "unicyclic_even_cycle",
        &["unicyclic", "fixtures/even_cycle.json"],
    ),
    (
        "unicyclic_path_mismatch",
        &["unicyclic", "fixtures/path_mismatch.json"],
    ),
    (
        "explore_swaps",
        &["explore", "fixtures/fig2.json", "--moves", "swaps"],
    ),
    (
        "explore_double",
        &["explore", "fixtures/fig2.json", "--moves", "swaps+double"],
    ),
    (
        "explore_path_swaps",
        &["explore", "fixtures/fig2.json", "--path", "0", "2"],
    ),
    (
        "explore_path_double",
        &[
            "explore",
            "fixtures/fig2.json",
            "--moves",
            "swaps+double",
            "--path",
            "0",
            "2",
        ],
    ),
    ("verify_counterexample", &["verify-counterexample"]),
    ("jdm_loop", &["jdm", "fixtures/jdm_loop.txt"]),
    ("jdm_pair", &["jdm", "fixtures/jdm_pair.txt"]),
    ("jdm_nonintegral", &["jdm", "fixtures/jdm_nonintegral.txt"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir()
        .join("fixtures/golden")
        .join(format!("{name}.txt"))
}

/// The exit code on the first line, then standard output.
pub fn render(r: &Run) -> String {
    format!("exit: {}\n{}", r.code, r.stdout)
}

/// Compares one case with its golden file, rewriting the file instead when
/// `UPDATE_GOLDEN` is set. Returns a description of any mismatch.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let got = render(&run(args, &[]));
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if got == want {
        Ok(())
    } else {
        Err(format!(
            "{name}: output differs from {}\n--- got\n{got}--- want\n{want}",
            path.display()
        ))
    }
}

/// `(arguments, environment, expected exit code)` for error paths.
pub type ExitCase = (
    &'static [&'static str],
    &'static [(&'static str, &'static str)],
    i32,
);

pub const EXIT_CASES: &[ExitCase] = &[
    (&["weak-realize", "fixtures/malformed.json"], &[], 2),
    (&["weak-realize", "fixtures/does_not_exist.json"], &[], 2),
    (
        &["bipartition", "fixtures/triangle.json", "--k", "1"],
        &[],
        2,
    ),
    (&["unicyclic", "fixtures/fig2.json"], &[], 2),
    (
        &["explore", "fixtures/fig2.json"],
        &[("SKELREAL_ORACLE_LIMIT", "5")],
        3,
    ),
    (
        &["explore", "fixtures/fig2.json", "--path", "0", "9"],
        &[],
        2,
    ),
    (&["bipartition", "fixtures/fig2.json"], &[], 2),
];

pub fn fixture(name: &str) -> PathBuf {
    crate_dir().join("fixtures").join(name)
}

pub fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}
