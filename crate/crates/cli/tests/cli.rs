//! End-to-end tests of the `ys` binary: output shapes, exit codes, and
//! byte-level determinism.

use std::process::{Command, Output};

fn ys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn out(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn err(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

#[test]
fn double_prints_the_doubled_partition() {
    let o = ys(&["double", "--parts", "4,2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(out(&o), "5,4,2,1\n");
}

#[test]
fn measure_alpha_exact_entries() {
    let o = ys(&[
        "measure", "--family", "alpha", "--n", "3", "--alpha", "3/16", "--format", "exact",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(out(&o), "3\t66/67\n2,1\t1/67\n");
}

#[test]
fn enum_json_parses_back() {
    let o = ys(&["enum", "--kind", "young", "--n", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&out(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["parts"], "4");
    assert_eq!(rows[0]["dim"], "1");
    assert_eq!(rows[4]["parts"], "1,1,1,1");
}

#[test]
fn usage_errors_exit_2_with_one_line_diagnostics() {
    // not strictly decreasing
    let o = ys(&["double", "--parts", "2,2"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).lines().count() == 1, "stderr: {}", err(&o));

    // inadmissible z parameters: integer roots
    let o = ys(&["measure", "--family", "z", "--n", "2", "--s", "3", "--p", "2"]);
    assert_eq!(code(&o), 2);
    assert!(
        err(&o).contains("must be positive"),
        "diagnostic names the condition: {}",
        err(&o)
    );

    // missing family parameter
    let o = ys(&["measure", "--family", "alpha", "--n", "2"]);
    assert_eq!(code(&o), 2);

    // over the safety cap
    let o = ys(&["enum", "--kind", "young", "--n", "30"]);
    assert_eq!(code(&o), 2);
    assert!(err(&o).contains("--max-n"));
    let o = ys(&["enum", "--kind", "young", "--n", "30", "--max-n", "30"]);
    assert_eq!(code(&o), 0);

    // unknown flag is a clap usage error
    let o = ys(&["enum", "--kind", "young", "--n", "3", "--bogus"]);
    assert_eq!(code(&o), 2);

    // forced-sym growth is tied to the alpha family on the schur graph
    let o = ys(&[
        "sample", "--kind", "young", "--family", "plancherel", "--n", "3", "--method",
        "forced-sym",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_passes_with_a_json_report() {
    let o = ys(&["verify", "--prop", "down-equality", "--max-n", "6"]);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&out(&o)).unwrap();
    assert_eq!(report["prop"], "down-equality");
    assert_eq!(report["status"], "pass");
    assert_eq!(report["witnesses"].as_array().unwrap().len(), 0);

    let o = ys(&["verify", "--prop", "z-up", "--max-n", "5", "--alpha", "7/5"]);
    assert_eq!(code(&o), 0);

    // The exhaustive walker refuses oversized sweeps.
    let o = ys(&["verify", "--prop", "lemma-dpaths", "--max-n", "14"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn measure_json_round_trips_through_tv() {
    let path = std::env::temp_dir().join(format!("ys-roundtrip-{}.json", std::process::id()));
    let o = ys(&[
        "measure", "--family", "z", "--n", "5", "--s", "-1", "--p", "3/16", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    std::fs::write(&path, out(&o)).unwrap();
    let o = ys(&["tv", "--against", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(out(&o), "0\n");
    std::fs::remove_file(&path).ok();
}

#[test]
fn histogram_tv_is_small_but_nonzero() {
    let path = std::env::temp_dir().join(format!("ys-hist-{}.json", std::process::id()));
    let o = ys(&[
        "sample", "--kind", "schur", "--family", "alpha", "--alpha", "3/16", "--n", "5",
        "--count", "4000", "--seed", "9", "--method", "forced-sym", "--emit", "hist",
        "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    std::fs::write(&path, out(&o)).unwrap();
    let o = ys(&["tv", "--against", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let tv = out(&o);
    assert_ne!(tv.trim(), "0");
    assert!(tv.contains('/'), "tv is an exact rational: {tv}");
    std::fs::remove_file(&path).ok();
}

#[test]
fn sampling_is_byte_identical_per_seed() {
    let args = [
        "sample", "--kind", "schur", "--family", "alpha", "--alpha", "3/16", "--n", "6",
        "--count", "50", "--seed", "31415", "--emit", "traces",
    ];
    let a = ys(&args);
    let b = ys(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "same seed, same bytes");

    let mut other = args;
    other[13] = "31416";
    let c = ys(&other);
    assert_ne!(a.stdout, c.stdout, "different seed, different bytes");
}

#[test]
fn seed_env_var_supplies_the_default() {
    let with_flag = ys(&[
        "sample", "--kind", "young", "--family", "plancherel", "--n", "5", "--count", "10",
        "--seed", "777", "--emit", "traces",
    ]);
    let with_env = Command::new(env!("CARGO_BIN_EXE_ys"))
        .args([
            "sample", "--kind", "young", "--family", "plancherel", "--n", "5", "--count", "10",
            "--emit", "traces",
        ])
        .env("YS_SEED", "777")
        .output()
        .unwrap();
    assert_eq!(with_flag.stdout, with_env.stdout);
}

#[test]
fn forced_traces_visit_symmetric_diagrams() {
    let o = ys(&[
        "sample", "--kind", "schur", "--family", "alpha", "--alpha", "1/4", "--n", "4",
        "--count", "5", "--seed", "3", "--method", "forced-sym", "--emit", "traces",
    ]);
    assert_eq!(code(&o), 0);
    for line in out(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let trace = v["trace"].as_array().unwrap();
        assert_eq!(trace.len(), 9);
        assert_eq!(trace[0], "");
    }
}
