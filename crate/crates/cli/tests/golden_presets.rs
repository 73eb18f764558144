//! Byte-for-byte comparison of every preset against frozen CSV files.
//!
//! Regenerate with `MMWAVE_UPDATE_GOLDEN=1 cargo test -p mmwave-cli --test golden_presets`.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn golden(figure: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{figure}.csv"))
}

fn check(figure: &str) {
    let out = Command::new(env!("CARGO_BIN_EXE_mmwave"))
        .args(["preset", figure])
        .output()
        .unwrap();
    assert!(out.status.success());
    let path = golden(figure);
    if std::env::var_os("MMWAVE_UPDATE_GOLDEN").is_some() {
        fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let frozen = fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    if frozen != out.stdout {
        let now = String::from_utf8_lossy(&out.stdout);
        let then = String::from_utf8_lossy(&frozen);
        let first = now
            .lines()
            .zip(then.lines())
            .position(|(a, b)| a != b)
            .unwrap_or_else(|| now.lines().count().min(then.lines().count()));
        panic!(
            "{figure} differs from {} at line {}: {:?} vs {:?}",
            path.display(),
            first + 1,
            now.lines().nth(first),
            then.lines().nth(first)
        );
    }
}

#[test]
fn fig2() {
    check("fig2");
}

#[test]
fn fig3() {
    check("fig3");
}

#[test]
fn fig4() {
    check("fig4");
}

#[test]
fn fig5() {
    check("fig5");
}

#[test]
fn fig6() {
    check("fig6");
}
