#![allow(dead_code)]

use std::path::PathBuf;

use halflib_cli::{run, Outcome};

/// Fixed invocations whose structured output is pinned under `tests/golden`.
pub const GOLDEN: &[(&str, &[&str])] = &[
    ("nf", &["--n", "3", "--format", "structured", "nf", "v1*v2*v3 - v3*v2*v1 + v1^2 - 2 v2 v1 v1"]),
    ("nf_proj", &["--n", "3", "--format", "structured", "nf", "p12 p23 - 1/2 p(3,1)"]),
    ("eq", &["--n", "3", "--format", "structured", "eq", "v1 v2 v3", "v3 v2 v1"]),
    ("eq_false", &["--n", "2", "--format", "structured", "eq", "v1 v2", "v2 v1"]),
    ("pair", &["--n", "3", "--degree", "3", "--seed", "7", "--format", "structured", "pair", "v1 v2 - v2 v1", "v3"]),
    (
        "pair_points",
        &[
            "--n",
            "2",
            "--degree",
            "3",
            "--format",
            "structured",
            "pair",
            "v1 v1 - 9/25",
            "--point",
            "3/5,4/5",
            "--point",
            "3/5,-4/5",
            "--point",
            "3/5,4/5i",
            "--point",
            "-3/5i,4/5",
            "--point",
            "1,0",
        ],
    ),
    ("projcheck", &["--n", "3", "--format", "structured", "projcheck"]),
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{}.toml", name))
}

pub fn invoke(args: &[&str]) -> Outcome {
    run(std::iter::once("halflib").chain(args.iter().copied()))
}

/// Runs a golden case twice; `Err` describes the first mismatch. Setting
/// `HALFLIB_BLESS=1` rewrites the file instead of comparing.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let first = invoke(args);
    let second = invoke(args);
    if first != second {
        return Err(format!("{}: output differs between runs", name));
    }
    if first.code > 1 {
        return Err(format!("{}: exit code {} ({})", name, first.code, first.stderr.trim()));
    }
    let path = golden_path(name);
    if std::env::var_os("HALFLIB_BLESS").is_some() {
        std::fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {}", path.display(), e))?;
    if expected != first.stdout {
        return Err(format!("{}: output differs from {}", name, path.display()));
    }
    Ok(())
}
