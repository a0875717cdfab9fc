use std::path::Path;
use std::process::Command;

fn raysearch(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_raysearch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_to(dir: &Path, name: &str, args: &[&str]) -> Vec<u8> {
    let out = dir.join(name);
    let mut full: Vec<&str> = args.to_vec();
    let path = out.to_str().unwrap();
    full.extend(["--out", path]);
    let status = raysearch(&full);
    assert!(
        status.status.success(),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    std::fs::read(out).unwrap()
}

#[test]
fn identical_configs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &[
            "entangle-sweep",
            "--n",
            "3",
            "--points",
            "9",
            "--method",
            "all",
            "--resolution",
            "128",
            "--seed",
            "7",
        ],
        &["grover-trace", "--n", "6", "--target", "17", "--kmax", "10"],
        &["measure-compare", "--points", "31"],
        &[
            "search-time",
            "--qmin",
            "0.01",
            "--qmax",
            "1",
            "--points",
            "50",
        ],
        &["separability", "--n", "4", "--points", "100"],
    ];
    for args in cases {
        let a = run_to(dir.path(), "same.csv", args);
        let b = run_to(dir.path(), "same.csv", args);
        assert_eq!(a, b, "{args:?}");
        let text = String::from_utf8(a).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("# raysearch "));
        assert!(lines
            .next()
            .unwrap()
            .starts_with(&format!("# config: command={}", args[0])));
        assert!(lines.next().unwrap().starts_with("# units: "));
        assert!(!text.contains('\r'));
    }
}

#[test]
fn stdout_output() {
    let out = raysearch(&["separability", "--n", "2", "--points", "3", "--out", "-"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4);
}

#[test]
fn usage_and_domain_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let out = out.to_str().unwrap();
    let bad: [&[&str]; 8] = [
        &[
            "entangle-sweep",
            "--n",
            "2",
            "--points",
            "5",
            "--method",
            "nope",
            "--out",
            out,
        ],
        &[
            "entangle-sweep",
            "--n",
            "9",
            "--points",
            "5",
            "--method",
            "oracle",
            "--out",
            out,
        ],
        &[
            "grover-trace",
            "--n",
            "21",
            "--target",
            "0",
            "--kmax",
            "1",
            "--out",
            out,
        ],
        &[
            "grover-trace",
            "--n",
            "3",
            "--target",
            "8",
            "--kmax",
            "1",
            "--out",
            out,
        ],
        &[
            "search-time",
            "--qmin",
            "0.5",
            "--qmax",
            "0.2",
            "--points",
            "5",
            "--out",
            out,
        ],
        &["measure-compare", "--points", "1", "--out", out],
        &[
            "separability",
            "--n",
            "4",
            "--points",
            "10",
            "--tol",
            "0",
            "--out",
            out,
        ],
        &["frobnicate"],
    ];
    for args in bad {
        let status = raysearch(args);
        assert_eq!(status.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_fails() {
    let status = raysearch(&[
        "separability",
        "--n",
        "2",
        "--points",
        "3",
        "--out",
        "/nonexistent/dir/x.csv",
    ]);
    assert!(!status.status.success());
}
