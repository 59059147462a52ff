//! Replays the fast corpus entries through the CLI binary and compares the
//! output byte-for-byte with the golden reports. The triangle_w6 entry is
//! exercised by `cmtilt corpus` and the acceptance suite; it is skipped here
//! to keep the default test run quick.

use std::path::Path;
use std::process::Command;

fn golden_roundtrip(cmd: &str, stem: &str) {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..");
    let input = root.join(format!("corpus/{stem}.json"));
    let golden = root.join(format!("corpus/{stem}.golden.txt"));
    let out = Command::new(env!("CARGO_BIN_EXE_cmtilt"))
        .arg(cmd)
        .arg(&input)
        .output()
        .expect("failed to run cmtilt");
    assert!(
        out.status.success(),
        "{stem}: cmtilt exited with {:?}\n{}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    let got = String::from_utf8(out.stdout).expect("non-utf8 report");
    let want = std::fs::read_to_string(&golden).expect("missing golden");
    assert_eq!(got, want, "{stem}: report drifted from its golden copy");
}

#[test]
fn a2_word_matches_golden() {
    golden_roundtrip("ppalg", "a2_word");
}

#[test]
fn triangle_w4_matches_golden() {
    golden_roundtrip("ppalg", "triangle_w4");
}

#[test]
fn dual_numbers_matches_golden() {
    golden_roundtrip("algebra-analyze", "dual_numbers");
}

#[test]
fn counter_silting_matches_golden() {
    golden_roundtrip("algebra-analyze", "counter_silting");
}
