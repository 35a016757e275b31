use std::process::{Command, Output};

use serde_json::Value;
use spinblocks::BarPartition;

fn spinblocks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinblocks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn decompose_example() {
    let out = spinblocks(&["decompose", "--p", "5", "14,12,8,6,3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("core: ∅\n"));
    assert!(text.contains("quotient: (∅, (2,1,1), (3,2))\n"));
    assert!(text.contains("weight: 9\n"));
}

#[test]
fn decompose_json_round_trips() {
    let out = spinblocks(&["decompose", "--p", "3", "--json", "--partition", "7,4,2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let core: BarPartition = serde_json::from_value(v["core"].clone()).unwrap();
    let cocore: BarPartition = serde_json::from_value(v["cocore"].clone()).unwrap();
    assert_eq!(core.size() + cocore.size(), 14);
    assert_eq!(v["t"], 3);
}

#[test]
fn tau_example() {
    let out = spinblocks(&["tau", "--p", "3", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-1\n");
    let out = spinblocks(&["tau", "--p", "3", "--e", "0", "--s", "1", "2,1"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn abacus_and_pairs() {
    let out = spinblocks(&["abacus", "--p", "3", "5,3,2,1"]);
    assert_eq!(stdout(&out), "● ○ ●\n○ ● ●\n0 1 2\n");
    let out = spinblocks(&["pairs", "--p", "5", "14,12,8,6,3,2"]);
    assert_eq!(stdout(&out), "(6, 14)\n(2, 3)\n(12, 8)\n");
}

#[test]
fn blocks_listing() {
    let out = spinblocks(&["blocks", "--p", "3", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("block κ = ∅, w = 2, defect 2\n"));
    assert!(text.contains("  (6)+  height 0\n"));
    let out = spinblocks(&["blocks", "--p", "3", "--n", "6", "--group", "gplus", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["group"], "gplus");
}

#[test]
fn verify_exit_codes() {
    let out = spinblocks(&["verify", "little", "--p", "3", "--max-n", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("violations: 0\n"));

    let out = spinblocks(&["verify", "crossing_fails", "--p", "3", "--max-n", "10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("first violation: "));

    let out = spinblocks(&[
        "verify",
        "crossing_fails",
        "--p",
        "3",
        "--max-n",
        "10",
        "--expect-violations",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = spinblocks(&[
        "verify",
        "crossing_fails",
        "--p",
        "5",
        "--max-n",
        "10",
        "--expect-violations",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_json_report() {
    let out = spinblocks(&["verify", "lengths", "--p", "5", "--max-n", "25", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "lengths");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert!(v["cases"].as_u64().unwrap() > 0);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tau", "--p", "4", "2,1"][..],
        &["decompose", "--p", "3", "2,2"],
        &["decompose", "--p", "3"],
        &["verify", "nope", "--p", "3", "--max-n", "4"],
        &["verify", "little", "--p", "3", "--max-n", "0"],
        &["frobnicate"],
        &["blocks", "--n", "4"],
    ] {
        assert_eq!(spinblocks(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "psi", "--p", "3", "--max-n", "7", "--json"];
    assert_eq!(spinblocks(&args).stdout, spinblocks(&args).stdout);
}
