//! The binary's observable behaviour: outputs, exit codes and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-centre"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

#[test]
fn centre_basis_rank_three() {
    let out = run(&["centre-basis", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("p_2 = (1 e3) X2 + (1 e3) X1 + (-1 e2) X1 X2 + (1) X1^2 X2^2"),
        "{text}"
    );
    assert!(text.contains("rank=9"));
}

#[test]
fn centre_basis_rank_one_and_invalid() {
    assert!(stdout(&run(&["centre-basis", "--m", "1"])).contains("p_0 = (1) 1"));
    let out = run(&["centre-basis", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m must be at least 1"));
}

#[test]
fn centre_basis_json_parses() {
    let out = run(&["centre-basis", "--m", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rank"], 5);
    assert_eq!(v["elements"][4]["label"], "p_1 T");
    assert_eq!(v["elements"][4]["element"]["g"][0]["coeff"], "-1 e2");
}

#[test]
fn verify_passes_and_names_checks() {
    let out = run(&["verify", "--m-max", "3", "--k-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.contains("PASS theorem:m=3:k=1  X_1^{k-1}z = p_{k}"),
        "{text}"
    );
    assert!(!text.contains("FAIL"));

    let out = run(&["verify", "--m-max", "1", "--k-max", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn verify_rejects_bad_ranges() {
    assert_eq!(run(&["verify", "--m-max", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--k-max", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--max-seconds", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn centre_dim_examples() {
    for (args, want) in [
        (
            &["centre-dim", "--m", "3", "--q", "5/2", "--e", "1,2,3"][..],
            "9\n",
        ),
        (
            &["centre-dim", "--m", "3", "--q", "1", "--e", "0,0,1"][..],
            "9\n",
        ),
        (
            &["centre-dim", "--m", "1", "--q", "3", "--e", "2"][..],
            "2\n",
        ),
        (&["centre-dim", "--m", "3"][..], "9\n"),
        (
            &[
                "centre-dim",
                "--m",
                "3",
                "--q",
                "2",
                "--e",
                "0,0,1",
                "--prime",
                "7",
            ][..],
            "9\n",
        ),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(stdout(&out), want, "{args:?}");
    }
    assert_eq!(
        run(&["centre-dim", "--m", "2", "--q", "0", "--e", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["centre-dim", "--m", "2", "--q", "1/0", "--e", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["centre-dim", "--m", "2", "--prime", "8"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fixed_outputs() {
    assert_eq!(
        stdout(&run(&["counterexample-q1"])),
        "{\"subalgebra_dim\": 6, \"centre_dim\": 9}\n"
    );
    assert_eq!(
        stdout(&run(&["semisimple", "--q", "-1", "--v", "1,2,3"])),
        "{\"P\": \"0\", \"semisimple\": false}\n"
    );
    assert_eq!(
        stdout(&run(&["multipartitions", "--m", "3", "--n", "2"])),
        "9\n"
    );
    assert_eq!(
        run(&["semisimple", "--q", "0", "--v", "1,2"]).status.code(),
        Some(2)
    );
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["centre-basis", "--m", "4", "--json"][..],
        &["verify", "--m-max", "2", "--k-max", "3", "--json"][..],
        &["centre-dim", "--m", "3", "--seed", "5", "--json"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status, b.status);
    }
}
