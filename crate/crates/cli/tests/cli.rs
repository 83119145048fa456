use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use twosample::{StatKind, TestResult};

fn twosample(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twosample"))
        .args(args)
        .env_remove("TWOSAMPLE_SEED")
        .output()
        .expect("binary runs")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(
        o.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dts_of_two_point_samples() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "0\n1\n");
    let b = file(&dir, "b.txt", "2\n3\n");
    let out = twosample(&[
        "test",
        "--method",
        "dts",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--resamples",
        "1",
    ]);
    let r: TestResult = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.method, StatKind::Dts);
    assert!((r.statistic - 28.0 / 3.0).abs() < 1e-12);
    assert_eq!(r.n_resamples, 1);
}

#[test]
fn identical_files_give_p_one_for_every_method() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "# sample\n0.3\n\n1.7\n-2\n1.7\n");
    let out = twosample(&[
        "test",
        "--method",
        "all",
        "--a",
        s(&a),
        "--b",
        s(&a),
        "--resamples",
        "200",
    ]);
    let results: Vec<TestResult> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(results.len(), 6);
    for r in results {
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value, 1.0, "{}", r.method);
    }
}

#[test]
fn json_round_trips_the_library_result() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "0.1\n0.9\n1.4\n2.2\n");
    let b = file(&dir, "b.txt", "1.1\n2.5\n3.0\n");
    let out = twosample(&[
        "test",
        "--method",
        "ad",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--seed",
        "11",
        "--resamples",
        "300",
    ]);
    let parsed: TestResult = serde_json::from_str(&stdout(&out)).unwrap();
    let plan = twosample::ResamplePlan::default()
        .with_seed(11)
        .with_resamples(300);
    let sa = twosample::Sample::new(vec![0.1, 0.9, 1.4, 2.2]).unwrap();
    let sb = twosample::Sample::new(vec![1.1, 2.5, 3.0]).unwrap();
    let expected = twosample::two_sample_test(&sa, &sb, StatKind::Ad, &plan).unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn seed_from_environment_and_flag_wins() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "0\n1\n2\n");
    let b = file(&dir, "b.txt", "1.5\n2.5\n3.5\n");
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_twosample"));
        cmd.args(["test", "--a", s(&a), "--b", s(&b), "--resamples", "50"]);
        match env {
            Some(v) => cmd.env("TWOSAMPLE_SEED", v),
            None => cmd.env_remove("TWOSAMPLE_SEED"),
        };
        if let Some(f) = flag {
            cmd.args(["--seed", f]);
        }
        let r: TestResult = serde_json::from_str(&stdout(&cmd.output().unwrap())).unwrap();
        r.seed
    };
    assert_eq!(run(None, None), 0);
    assert_eq!(run(Some("42"), None), 42);
    assert_eq!(run(Some("42"), Some("7")), 7);
}

#[test]
fn csv_column_selection() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.csv", "id,x\n1,0\n2,1\n");
    let b = file(&dir, "b.csv", "id,x\n1,2\n2,3\n");
    let out = twosample(&[
        "test",
        "--method",
        "dts",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--col",
        "x",
        "--format",
        "csv",
        "--resamples",
        "10",
    ]);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "dts");
    assert!((row[1].parse::<f64>().unwrap() - 28.0 / 3.0).abs() < 1e-12);
}

#[test]
fn text_format_uses_six_significant_digits() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "0\n1\n");
    let b = file(&dir, "b.txt", "2\n3\n");
    let out = twosample(&[
        "test",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--format",
        "text",
        "--resamples",
        "10",
    ]);
    assert!(stdout(&out).contains("statistic = 9.33333 "));
}

#[test]
fn parse_error_names_the_line_and_exits_2() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "1\n\nabc\n");
    let b = file(&dir, "b.txt", "2\n");
    let out = twosample(&["test", "--a", s(&a), "--b", s(&b)]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("a.txt:3"), "{err}");
    assert!(err.contains("abc"), "{err}");
}

#[test]
fn invalid_samples_exit_3() {
    let dir = TempDir::new().unwrap();
    let good = file(&dir, "good.txt", "2\n");
    for (name, text) in [
        ("empty.txt", "# nothing\n\n"),
        ("nan.txt", "1\nnan\n"),
        ("inf.txt", "inf\n"),
    ] {
        let bad = file(&dir, name, text);
        let out = twosample(&["test", "--a", s(&bad), "--b", s(&good)]);
        assert_eq!(out.status.code(), Some(3), "{name}");
    }
}

#[test]
fn missing_file_and_bad_flags_exit_2() {
    let dir = TempDir::new().unwrap();
    let good = file(&dir, "good.txt", "2\n");
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        twosample(&["test", "--a", s(&missing), "--b", s(&good)])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twosample(&["test", "--a", s(&good), "--b", s(&good), "--method", "xyz"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twosample(&["test", "--a", s(&good), "--b", s(&good), "--resamples", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twosample(&[
            "test",
            "--a",
            s(&good),
            "--b",
            s(&good),
            "--weights-a",
            s(&good)
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn weights_expand_before_testing() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "0\n1\n");
    let b = file(&dir, "b.txt", "2\n3\n");
    let wa = file(&dir, "wa.txt", "1\n1\n");
    let wb = file(&dir, "wb.txt", "0.5\n0.5\n");
    let weighted = twosample(&[
        "test",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--weights-a",
        s(&wa),
        "--weights-b",
        s(&wb),
        "--resamples",
        "100",
    ]);
    // a doubled against b once: {0,0,1,1} vs {2,3}
    let a2 = file(&dir, "a2.txt", "0\n0\n1\n1\n");
    let plain = twosample(&["test", "--a", s(&a2), "--b", s(&b), "--resamples", "100"]);
    assert_eq!(stdout(&weighted), stdout(&plain));

    let short = file(&dir, "short.txt", "1\n");
    let out = twosample(&[
        "test",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--weights-a",
        s(&short),
        "--weights-b",
        s(&wb),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn one_sample_against_a_reference() {
    let dir = TempDir::new().unwrap();
    let shifted: String = (0..40)
        .map(|i| format!("{}\n", 3.0 + i as f64 / 40.0))
        .collect();
    let a = file(&dir, "a.txt", &shifted);
    let out = twosample(&[
        "one-sample",
        "--a",
        s(&a),
        "--ref",
        "normal:0,1",
        "--k",
        "10",
        "--resamples",
        "500",
    ]);
    let r: TestResult = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(r.p_value < 0.01);

    let out = twosample(&[
        "one-sample",
        "--a",
        s(&a),
        "--ref",
        "uniform:3,4",
        "--method",
        "all",
        "--resamples",
        "200",
    ]);
    let rs: Vec<TestResult> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(rs.iter().all(|r| r.p_value > 0.01));

    let out = twosample(&["one-sample", "--a", s(&a), "--ref", "gamma:1,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mean_shift_grid_has_sixteen_rows_per_test() {
    let out = twosample(&[
        "power-sweep",
        "--dgp",
        "mean-shift",
        "--grid",
        "0:1.5:0.1",
        "--n",
        "10",
        "--sims",
        "5",
        "--resamples",
        "20",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "sweep_value,test,rate,se,n_sims");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 16 * 7);
    for test in ["ks", "kuiper", "cvm", "ad", "wass", "dts", "ttest"] {
        assert_eq!(
            rows.iter()
                .filter(|r| r.split(',').nth(1) == Some(test))
                .count(),
            16
        );
    }
}

#[test]
fn sweep_writes_files_and_plot() {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("curve.json");
    let svg = dir.path().join("p.svg");
    let out = twosample(&[
        "power-sweep",
        "--dgp",
        "mix-var",
        "--n-grid",
        "20,40",
        "--sims",
        "10",
        "--resamples",
        "20",
        "--format",
        "json",
        "--out",
        s(&out_path),
        "--plot",
        s(&svg),
    ]);
    assert!(stdout(&out).is_empty());
    let curve: twosample_sim::PowerCurve =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(curve.sweep, "n");
    assert_eq!(curve.grid, vec![20.0, 40.0]);
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("class=\"series\"").count(), curve.tests.len());
}

#[test]
fn sweep_rejects_bad_requests() {
    for args in [
        &["power-sweep", "--dgp", "gamma"][..],
        &["power-sweep", "--dgp", "mean-shift", "--grid", "1:0:0.1"],
        &["power-sweep", "--dgp", "mix-var", "--grid", "0:1:0.5"],
        &["power-sweep", "--dgp", "null", "--n", "5", "--sims", "0"],
        &["power-sweep", "--dgp", "null", "--n", "5", "--alpha", "1.5"],
    ] {
        assert_eq!(twosample(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bench_has_one_row_per_size() {
    let out = twosample(&[
        "bench",
        "--ns",
        "100,200,400",
        "--reps",
        "2",
        "--resamples",
        "20",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,mean_seconds,lo95,hi95");
    assert_eq!(lines.len(), 4);
    assert_eq!(
        twosample(&["bench", "--ns", "100", "--reps", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn same_flags_same_bytes() {
    let dir = TempDir::new().unwrap();
    let a = file(&dir, "a.txt", "0.1\n0.5\n0.9\n1.3\n");
    let b = file(&dir, "b.txt", "0.7\n1.1\n1.9\n");
    let args = [
        "test",
        "--method",
        "all",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--seed",
        "5",
        "--workers",
        "3",
        "--mode",
        "bootstrap",
    ];
    assert_eq!(stdout(&twosample(&args)), stdout(&twosample(&args)));
    let sweep = [
        "power-sweep",
        "--dgp",
        "mix-both",
        "--n",
        "15",
        "--sims",
        "8",
        "--resamples",
        "30",
        "--workers",
        "2",
    ];
    assert_eq!(stdout(&twosample(&sweep)), stdout(&twosample(&sweep)));
}
