//! CLI behavior: exit codes, output formats, seed reproducibility across
//! worker counts, and the documented command-level checks.

use std::path::PathBuf;
use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splitmerge"))
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("splitmerge_test_{}_{name}", std::process::id()));
    path
}

fn parse_csv_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .filter(|line| !line.starts_with('#') && !line.is_empty())
        .map(|line| line.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn usage_errors_exit_2() {
    let status = binary().arg("simulate").status().unwrap();
    assert_eq!(status.code(), Some(2));

    let status = binary()
        .args(["simulate", "--init", "0.4,0.4", "--steps", "1", "--replicas", "10"])
        .args(["--out", temp_path("bad_mass.csv").to_str().unwrap()])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2), "masses not summing to 1 are a usage error");

    let status = binary().args(["oracle-check", "--nmax", "1"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn size_limits_exit_3() {
    let out = temp_path("limit.csv");
    for args in [
        vec!["exact", "--n", "7", "--qmax", "1"],
        vec!["exact", "--n", "2", "--qmax", "30"],
        vec!["oracle-check", "--nmax", "9"],
    ] {
        let mut cmd = binary();
        cmd.args(&args);
        if args[0] == "exact" {
            cmd.args(["--out", out.to_str().unwrap()]);
        }
        let status = cmd.status().unwrap();
        assert_eq!(status.code(), Some(3), "args {args:?}");
    }
}

#[test]
fn outputs_are_byte_identical_across_worker_counts() {
    let mut outputs = Vec::new();
    for threads in ["1", "4"] {
        let out = temp_path(&format!("det_{threads}.csv"));
        let status = binary()
            .env("SPLITMERGE_THREADS", threads)
            .args(["simulate", "--init", "0.5,0.5", "--steps", "5"])
            .args(["--replicas", "20000", "--seed", "42"])
            .args(["--out", out.to_str().unwrap()])
            .status()
            .unwrap();
        assert!(status.success());
        outputs.push((
            std::fs::read(&out).unwrap(),
            std::fs::read(out.with_extension("json")).unwrap(),
        ));
    }
    assert_eq!(outputs[0].0, outputs[1].0, "CSV differs across worker counts");
    assert_eq!(outputs[0].1, outputs[1].1, "JSON differs across worker counts");
}

#[test]
fn simulate_zero_steps_is_exact() {
    let out = temp_path("zero_steps.csv");
    let status = binary()
        .args(["simulate", "--init", "1.0", "--steps", "0", "--replicas", "1000"])
        .args(["--seed", "1", "--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let rows = parse_csv_rows(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0], vec!["0", "1", "0", "1", "1"]);
}

#[test]
fn simulate_tracks_exact_transposition_moments() {
    // From (1.0) the mean of Σxᵢ² after q half steps is 1/2 + 1/(q+2); every
    // row of the summary must sit within 3 standard errors.
    let out = temp_path("exact_family.csv");
    let status = binary()
        .args(["simulate", "--init", "1.0", "--steps", "8", "--replicas", "100000"])
        .args(["--seed", "7", "--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    for row in parse_csv_rows(&std::fs::read_to_string(&out).unwrap()) {
        let q: f64 = row[0].parse().unwrap();
        let mean: f64 = row[1].parse().unwrap();
        let stderr: f64 = row[2].parse().unwrap();
        let expected = 0.5 + 1.0 / (q + 2.0);
        assert!(
            (mean - expected).abs() <= 3.0 * stderr + 1e-12,
            "q={q}: {mean} vs {expected} ± {}",
            3.0 * stderr
        );
    }
}

#[test]
fn oracle_check_passes_at_small_degree() {
    let output = binary().args(["oracle-check", "--nmax", "4"]).output().unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("all checks passed"));
    assert!(!stdout.contains("FAIL"));
}

#[test]
fn simulate_corollary_experiment_from_two_parts() {
    // Start (0.5, 0.5), q = 20: no exact formula for this start; the mean of
    // Σxᵢ² must sit near the PD(1) reference 0.5 up to the O(1/q)
    // binomial-mean drift (measured ≈ 0.046 at q = 20).
    let out = temp_path("corollary.csv");
    let status = binary()
        .args(["simulate", "--init", "0.5,0.5", "--steps", "20", "--replicas", "100000"])
        .args(["--seed", "20", "--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let rows = parse_csv_rows(&std::fs::read_to_string(&out).unwrap());
    let last = rows.last().unwrap();
    assert_eq!(last[0], "20");
    let mean: f64 = last[1].parse().unwrap();
    let stderr: f64 = last[2].parse().unwrap();
    let drift_allowance = 2.0 / 22.0;
    assert!(
        (mean - 0.5).abs() <= drift_allowance + 3.0 * stderr,
        "mean {mean} strayed from the PD reference beyond the drift band"
    );
}

#[test]
fn pd_ref_moments_and_single_sample() {
    let out = temp_path("pd_moments.csv");
    let status = binary()
        .args(["pd-ref", "--replicas", "100000", "--tol", "1e-8", "--seed", "9"])
        .args(["--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("json")).unwrap())
            .unwrap();
    let moments = &json["moments"];
    for (key, expected) in [
        ("mean_sum_squares", 0.5),
        ("mean_sum_cubes", 1.0 / 3.0),
    ] {
        let mean = moments[key].as_f64().unwrap();
        let stderr = moments[&format!("stderr_{}", &key[5..])].as_f64().unwrap();
        assert!(
            (mean - expected).abs() <= 3.0 * stderr,
            "{key}: {mean} vs {expected} ± {}",
            3.0 * stderr
        );
    }
    let counts = json["histogram"]["counts"].as_array().unwrap();
    let total: u64 = counts.iter().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(total, 100_000);

    // A single replica still yields a valid sorted sample.
    let out = temp_path("pd_single.csv");
    let status = binary()
        .args(["pd-ref", "--replicas", "1", "--seed", "3", "--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("json")).unwrap())
            .unwrap();
    let x1 = json["moments"]["mean_x1"].as_f64().unwrap();
    assert!(x1 > 0.0 && x1 <= 1.0);
    let s2 = json["moments"]["mean_sum_squares"].as_f64().unwrap();
    assert!(s2 > 0.0 && s2 <= 1.0);
}

#[test]
fn exact_csv_and_json_agree() {
    let out = temp_path("exact_pair.csv");
    let status = binary()
        .args(["exact", "--n", "3", "--qmax", "5", "--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    let rows = parse_csv_rows(&csv);
    assert_eq!(rows.len(), 6 * 3);
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("json")).unwrap())
            .unwrap();
    let entries = json.as_array().unwrap();
    assert_eq!(entries.len(), 6);
    for row in &rows {
        let (n, q, l, value) = (&row[0], &row[1], &row[2], &row[3]);
        let entry = &entries[q.parse::<usize>().unwrap()];
        assert_eq!(entry["n"].to_string(), *n);
        assert_eq!(entry["coefficients"][l].as_str().unwrap(), value);
    }
    // The Haar component stays 1/3! = 1/6 at every q.
    for entry in entries {
        assert_eq!(entry["coefficients"]["3"].as_str().unwrap(), "1/6");
    }
}

#[test]
fn exact_output_matches_golden_fixtures() {
    for (n, qmax, fixture) in [
        ("2", "8", "tests/golden/exact_n2_q8.json"),
        ("4", "6", "tests/golden/exact_n4_q6.json"),
    ] {
        let out = temp_path(&format!("golden_n{n}.csv"));
        let status = binary()
            .args(["exact", "--n", n, "--qmax", qmax, "--out", out.to_str().unwrap()])
            .status()
            .unwrap();
        assert!(status.success());
        let produced = std::fs::read(out.with_extension("json")).unwrap();
        let golden = std::fs::read(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(fixture),
        )
        .unwrap();
        assert_eq!(produced, golden, "wire format drifted from {fixture}");
    }
}
