use std::path::Path;
use std::process::{Command, Output};

use fpqaoa::format::parse_summary_csv;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpqaoa"))
        .args(args)
        .output()
        .expect("spawn fpqaoa")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x");
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
    assert_eq!(code(&["eval", "--help"]), 0);
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["eval", "--n", "4", "--out", s(&out)]), 1);
    assert_eq!(
        code(&[
            "eval",
            "--u",
            "1",
            "--v",
            "-1",
            "--n",
            "9..4",
            "--out",
            s(&out)
        ]),
        1
    );
    assert_eq!(
        code(&[
            "eval",
            "--u",
            "1",
            "--v",
            "-1",
            "--n",
            "4",
            "--norm",
            "l7",
            "--out",
            s(&out)
        ]),
        1
    );
    assert_eq!(
        code(&[
            "eval",
            "--u",
            "1",
            "--v",
            "-1",
            "--n",
            "4",
            "--alpha",
            "1.5",
            "--out",
            s(&out)
        ]),
        1
    );
    assert_eq!(
        code(&[
            "eval",
            "--params",
            s(&dir.path().join("missing.json")),
            "--n",
            "4",
            "--out",
            s(&out)
        ]),
        2
    );
    assert_eq!(
        code(&[
            "eval",
            "--u",
            "1",
            "--v",
            "-1",
            "--n",
            "17",
            "--count",
            "1",
            "--out",
            s(&out)
        ]),
        2
    );
    assert_eq!(
        code(&[
            "eval",
            "--u",
            "1",
            "--v",
            "-1",
            "--n",
            "4",
            "--count",
            "0",
            "--out",
            s(&out)
        ]),
        2
    );
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = |o: &Path| {
        vec![
            "eval".to_string(),
            "--u".into(),
            "2.09".into(),
            "--v".into(),
            "-0.477".into(),
            "--n".into(),
            "4..6".into(),
            "--count".into(),
            "30".into(),
            "--seed".into(),
            "7".into(),
            "--out".into(),
            s(o).into(),
        ]
    };
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for o in [&a, &b] {
        let v = args(o);
        assert_eq!(code(&v.iter().map(String::as_str).collect::<Vec<_>>()), 0);
    }
    for f in ["summary.csv", "baseline.csv"] {
        assert_eq!(
            std::fs::read(a.join(f)).unwrap(),
            std::fs::read(b.join(f)).unwrap()
        );
    }
    let rows = parse_summary_csv(&std::fs::read_to_string(a.join("summary.csv")).unwrap()).unwrap();
    assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 5, 6]);
}

#[test]
fn generate_writes_manifest_and_sparse_mixed_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gen");
    assert_eq!(
        code(&[
            "generate",
            "--kind",
            "mixed",
            "--n",
            "12",
            "--count",
            "40",
            "--seed",
            "5",
            "--out",
            s(&out)
        ]),
        0
    );
    let manifest = json(&out.join("manifest.json"));
    let files = manifest["files"].as_array().unwrap();
    assert_eq!(files.len(), 40);
    for f in files {
        assert!(out.join(f["file"].as_str().unwrap()).exists());
    }
    let zf = manifest["zero_fraction"].as_f64().unwrap();
    assert!((zf - 0.5).abs() < 0.05, "zero fraction {zf}");
    let inst = fpqaoa::format::read_instance(&out.join("instance_0003.json")).unwrap();
    assert_eq!(
        fpqaoa::format::fingerprint(&inst),
        files[3]["fingerprint"].as_str().unwrap()
    );
    assert!(out.join("config.json").exists());

    let spec = dir.path().join("spec.json");
    assert_eq!(
        code(&[
            "spectrum",
            "--instance",
            s(&out.join("instance_0000.json")),
            "--out",
            s(&spec)
        ]),
        0
    );
    let v = json(&spec);
    assert!(v["c_min"].as_f64().unwrap() <= v["c_max"].as_f64().unwrap());
}

#[test]
fn zero_budget_training_reports_initial_point() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t");
    let o = run(&[
        "train",
        "--n",
        "4",
        "--count",
        "6",
        "--budget",
        "0",
        "--init-u",
        "2.09",
        "--init-v",
        "-0.477",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let r = json(&out.join("train_result.json"));
    assert_eq!(r["eval_count"], 1);
    assert_eq!(r["params"]["u"][0], 2.09);
    assert_eq!(r["params"]["v"][0], -0.477);
}

#[test]
fn ablation_echo_records_fixed_depth() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ab");
    assert_eq!(
        code(&[
            "ablate",
            "--which",
            "no-m2",
            "--reuse-params",
            "--u",
            "2.09",
            "--v",
            "-0.477",
            "--n",
            "4",
            "--count",
            "5",
            "--out",
            s(&out),
        ]),
        0
    );
    let echo = json(&out.join("config.json"));
    assert_eq!(echo["run"]["depth"], "8");
    assert_eq!(echo["which"], "no-m2");
}

#[test]
fn alpha_zero_sweep_always_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sw");
    assert_eq!(
        code(&[
            "sweep-alpha",
            "--alphas",
            "0,0.95",
            "--u",
            "1.5",
            "--v",
            "-0.3",
            "--n",
            "4..6",
            "--count",
            "10",
            "--out",
            s(&out),
        ]),
        0
    );
    let rows =
        parse_summary_csv(&std::fs::read_to_string(out.join("summary_alpha_0.csv")).unwrap())
            .unwrap();
    assert!(rows.iter().all(|r| r.median_sts == 1.0));
    assert!(out.join("summary_alpha_0.95.csv").exists());
}
