#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// (golden file stem, arguments after the program name, exit status)
pub const GOLDEN: &[(&str, &[&str], i32)] = &[
    ("forall_true", &["forall", "true"], 0),
    ("forall_bit0", &["forall", "bit(0)"], 1),
    ("forall_not_six", &["forall", "!(bit(5) & !bit(6))"], 1),
    ("forall_monotone", &["forall", "bit(3) => bit(1)"], 0),
    ("find_bit0", &["find", "bit(0)"], 0),
    ("find_not_true", &["find", "!true"], 0),
    ("find_true", &["find", "true"], 1),
    ("decide_all_right", &["decide-sum", "all-right"], 1),
    ("decide_left_at_zero", &["decide-sum", "left-at-zero"], 0),
    ("decide_left_at_4bar", &["decide-sum", "left-at-4bar"], 0),
    ("classify_omega", &["classify", "omega"], 0),
    ("classify_six", &["classify", "6"], 0),
    ("classify_eps", &["classify", "!(bit(5) & !bit(6))"], 0),
    ("parse_error", &["forall", "bit(3"], 2),
    (
        "fuel_exhausted",
        &["--fuel", "5", "forall", "bit(100) => bit(0)"],
        3,
    ),
    (
        "prefix_four",
        &["--prefix", "4", "forall", "!(bit(2) & !bit(3))"],
        1,
    ),
];

pub struct Run {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn omnisearch(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_omnisearch"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        status: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden_path(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{stem}.json"))
}

/// The JSON text with the trailing `stats` member cut off.
pub fn without_stats(json: &str) -> &str {
    match json.find(",\"stats\":") {
        Some(i) => &json[..i],
        None => json.trim_end(),
    }
}

/// Runs one golden case with `--json`; returns a description of the first
/// mismatch, if any.
pub fn check_golden(stem: &str, args: &[&str], status: i32) -> Result<(), String> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let run = omnisearch(&full);
    if run.status != status {
        return Err(format!("{stem}: exit {} (wanted {status})", run.status));
    }
    let expected = std::fs::read_to_string(golden_path(stem)).map_err(|e| e.to_string())?;
    if without_stats(&run.stdout) != without_stats(&expected) {
        return Err(format!("{stem}: got {} wanted {}", run.stdout, expected));
    }
    Ok(())
}
