#![allow(dead_code)]

use std::path::PathBuf;

use serde_json::Value;

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares `actual` with the named golden file. With `UPDATE_GOLDEN=1` the
/// file is rewritten instead.
pub fn check_golden(name: &str, actual: &str) -> Result<(), String> {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path)
        .map_err(|e| format!("{}: {e} (run with UPDATE_GOLDEN=1 to create)", path.display()))?;
    if expected == actual {
        Ok(())
    } else {
        Err(format!(
            "{} differs from the current output:\n--- expected\n{expected}\n--- actual\n{actual}",
            path.display()
        ))
    }
}

/// Zeroes every `elapsed_ms` field, recursively.
pub fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map.iter_mut() {
                if k == "elapsed_ms" {
                    *x = Value::from(0);
                } else {
                    strip_timing(x);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

/// Runs `verify --seed 42 --cases 200 --json` and returns the exit code and
/// the report with timing removed, pretty-printed.
pub fn verify_report() -> (i32, String) {
    let out = rrclosure_cli::run_command(["rrclosure", "--json", "verify", "--seed", "42", "--cases", "200"]);
    let mut doc: Value = serde_json::from_str(&out.stdout).expect("verify prints JSON");
    strip_timing(&mut doc);
    (out.code, serde_json::to_string_pretty(&doc).unwrap() + "\n")
}
