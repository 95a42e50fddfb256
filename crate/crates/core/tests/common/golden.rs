//! CLI golden cases. Expected standard output lives in `tests/golden/<name>.json`;
//! set `DIAGCONJ_BLESS=1` to rewrite those files from the current binary logic.

use std::path::PathBuf;

use diagconj::cli::{execute, Outcome};

pub struct Case {
    pub name: &'static str,
    /// Subcommand plus mode flags (`--group`, `--context`, ...).
    pub head: &'static [&'static str],
    /// Operand flags, replaced by `--json` in the round-trip check.
    pub operands: &'static [&'static str],
    pub code: i32,
}

macro_rules! case {
    ($name:expr, [$($h:expr),*], [$($o:expr),*], $code:expr) => {
        Case { name: $name, head: &[$($h),*], operands: &[$($o),*], code: $code }
    };
}

pub const CASES: &[Case] = &[
    case!("snf-example", ["snf"], ["--matrix", "2 4; 6 8"], 0),
    case!(
        "snf-no-rows",
        ["snf"],
        ["--json", r#"{"rows":0,"cols":2,"entries":[]}"#],
        0
    ),
    case!(
        "snf-rectangular",
        ["snf"],
        ["--matrix", "4 6 10; 6 9 15"],
        0
    ),
    case!("hnf-basic", ["hnf"], ["--matrix", "1 2; 3 4"], 0),
    case!(
        "hnf-rank-deficient",
        ["hnf"],
        ["--matrix", "2 4; 1 2; 3 6"],
        0
    ),
    case!(
        "lattice-equal-true",
        ["lattice-equal"],
        ["--a", "1 2; 3 4", "--b", "1 0; 0 2"],
        0
    ),
    case!(
        "lattice-equal-false",
        ["lattice-equal"],
        ["--a", "2 0", "--b", "0 2"],
        0
    ),
    case!("isotype-mixed", ["isotype"], ["--matrix", "2 2"], 0),
    case!("isotype-finite", ["isotype"], ["--matrix", "2 0; 0 3"], 0),
    case!(
        "conjugate-gln",
        ["conjugate", "--group", "gln"],
        ["--a", "1 2 3", "--b", "3 2 1"],
        0
    ),
    case!(
        "conjugate-monomial-false",
        ["conjugate", "--group", "monomial"],
        ["--a", "1 1", "--b", "1 2"],
        0
    ),
    case!(
        "conjugate-crn",
        ["conjugate", "--group", "crn"],
        ["--a", "2 0", "--b", "0 2"],
        0
    ),
    case!(
        "conjugate-crn-false",
        ["conjugate", "--group", "crn"],
        ["--a", "2 0", "--b", "3 0"],
        0
    ),
    case!(
        "conjugate-autn-codim1",
        ["conjugate", "--group", "autn-codim1"],
        ["--a", "1 2", "--b", "-2 -1"],
        0
    ),
    case!(
        "conjugate-autn-codim1-too-small",
        ["conjugate", "--group", "autn-codim1"],
        ["--a", "1 0 0; 0 1 0", "--b", "1 0 0"],
        2
    ),
    case!(
        "canonical-crn",
        ["canonical", "--context", "crn"],
        ["--matrix", "2 4; 6 8"],
        0
    ),
    case!(
        "canonical-crn-torus-part",
        ["canonical", "--context", "crn"],
        ["--matrix", "0 6 4"],
        0
    ),
    case!(
        "canonical-autn-codim1",
        ["canonical", "--context", "autn-codim1"],
        ["--weights", "1 0"],
        0
    ),
    case!(
        "canonical-aut3-torus",
        ["canonical", "--context", "aut3-torus"],
        ["--weights", "3 -1 2"],
        0
    ),
    case!(
        "canonical-aut3-torus-not-primitive",
        ["canonical", "--context", "aut3-torus"],
        ["--weights", "2 4 6"],
        2
    ),
    case!(
        "canonical-crn-codim1",
        ["canonical", "--context", "crn-codim1"],
        ["--weights", "4 6 0"],
        0
    ),
    case!("orbit-mixed-signs", ["orbit"], ["--weights", "1 -1"], 0),
    case!(
        "orbit-limit-of-generic",
        ["orbit"],
        ["--weights", "1 2 0", "--zeros", "3"],
        0
    ),
    case!("orbit-zero-weights", ["orbit"], ["--weights", "0 0"], 0),
    case!(
        "orbit-axis-nonclosed",
        ["orbit"],
        ["--weights", "1 1", "--zeros", "1"],
        0
    ),
    case!(
        "action-report-stable",
        ["action-report"],
        ["--weights", "1 2 3"],
        0
    ),
    case!(
        "action-report-mixed",
        ["action-report"],
        ["--weights", "1 -1 2"],
        0
    ),
    case!("normalizer-axis", ["normalizer"], ["--weights", "0 1 0"], 0),
    case!("normalizer-weyl", ["normalizer"], ["--weights", "1 1 1"], 0),
    case!("normalizer-mixed", ["normalizer"], ["--weights", "1 -1"], 0),
    case!("roots-full", ["roots"], ["--dim", "2", "--degree", "1"], 0),
    case!(
        "roots-special",
        ["roots", "--torus", "special"],
        ["--dim", "2", "--degree", "2"],
        0
    ),
    case!(
        "roots-count",
        ["roots", "--count-only"],
        ["--dim", "4", "--degree", "5"],
        0
    ),
    case!(
        "oracle-torsion",
        ["oracle-torsion"],
        ["--weights", "2 -4", "--modulus", "6"],
        0
    ),
    case!(
        "oracle-lattice-equal",
        ["oracle-lattice-equal"],
        ["--a", "1 2; 3 4", "--b", "1 0; 0 2", "--bound", "4"],
        0
    ),
    case!(
        "oracle-closedness",
        ["oracle-closedness"],
        ["--weights", "1 1", "--zeros", "1", "--bound", "2"],
        0
    ),
    case!(
        "oracle-perm-sign",
        ["oracle-perm-sign"],
        ["--a", "1 2", "--b", "-2 -1"],
        0
    ),
    case!(
        "malformed-ragged-matrix",
        ["snf"],
        ["--matrix", "1 2; 3"],
        1
    ),
    case!(
        "malformed-json",
        ["hnf"],
        ["--json", r#"{"entries": 5}"#],
        1
    ),
    case!(
        "malformed-zero-index",
        ["orbit"],
        ["--weights", "1 2", "--zeros", "0"],
        1
    ),
    case!(
        "malformed-two-sources",
        ["snf"],
        ["--matrix", "1", "--weights", "1"],
        1
    ),
    case!("usage-unknown-subcommand", ["frobnicate"], [], 1),
    case!("usage-missing-input", ["snf"], [], 1),
    case!(
        "precondition-zero-vector",
        ["canonical", "--context", "autn-codim1"],
        ["--weights", "0 0"],
        2
    ),
    case!(
        "precondition-dimension",
        ["lattice-equal"],
        ["--a", "1 2", "--b", "1 2 3"],
        2
    ),
    case!(
        "precondition-zero-index-range",
        ["orbit"],
        ["--weights", "1 2", "--zeros", "5"],
        2
    ),
];

pub fn argv(head: &[&str], operands: &[&str]) -> Vec<String> {
    std::iter::once("diagconj")
        .chain(head.iter().copied())
        .chain(operands.iter().copied())
        .map(String::from)
        .collect()
}

pub fn run(args: &[String]) -> Outcome {
    execute(args.to_vec(), &mut std::io::empty())
}

pub fn run_with_stdin(args: &[String], stdin: &str) -> Outcome {
    execute(args.to_vec(), &mut stdin.as_bytes())
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

/// Checks one case against its golden file, its exit code, a rerun and
/// (for successes) the `--json` round trip. Returns the failures.
pub fn check(case: &Case) -> Vec<String> {
    let mut failures = Vec::new();
    let args = argv(case.head, case.operands);
    let out = run(&args);
    let path = golden_path(case.name);
    if std::env::var_os("DIAGCONJ_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    match std::fs::read_to_string(&path) {
        Ok(expected) if expected == out.stdout => {}
        Ok(expected) => failures.push(format!(
            "{}: stdout differs from golden\n  expected {expected}  actual   {}",
            case.name, out.stdout
        )),
        Err(e) => failures.push(format!(
            "{}: cannot read {}: {e}",
            case.name,
            path.display()
        )),
    }
    if out.code != case.code {
        failures.push(format!(
            "{}: exit code {} != {}",
            case.name, out.code, case.code
        ));
    }
    match serde_json::from_str::<serde_json::Value>(&out.stdout) {
        Ok(v) => {
            if v["schema_version"] != 1 || v["ok"] != (case.code == 0) {
                failures.push(format!("{}: bad envelope {}", case.name, out.stdout));
            }
            if case.code != 0 && v["error"]["code"] != case.code {
                failures.push(format!("{}: error code field mismatch", case.name));
            }
        }
        Err(e) => failures.push(format!("{}: stdout is not JSON: {e}", case.name)),
    }
    if case.code != 0 && out.stderr.is_empty() {
        failures.push(format!("{}: no diagnostic on stderr", case.name));
    }
    if run(&args) != out {
        failures.push(format!("{}: rerun is not byte-identical", case.name));
    }
    if case.code == 0 {
        let trimmed = out.stdout.trim_end().to_string();
        let again = run(&argv(case.head, &["--json", &trimmed]));
        if again.stdout != out.stdout {
            failures.push(format!(
                "{}: --json round trip changed output\n  {}",
                case.name, again.stdout
            ));
        }
        let piped = run_with_stdin(&argv(case.head, &["--stdin"]), &out.stdout);
        if piped.stdout != out.stdout {
            failures.push(format!("{}: --stdin round trip changed output", case.name));
        }
    }
    failures
}
