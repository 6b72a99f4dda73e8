use std::process::{Command, Output};

fn lrpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrpoly")).args(args).output().expect("run lrpoly")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn lr_values() {
    let o = lrpoly(&["lr", "--lambda", "1", "--mu", "1", "--nu", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "a_0 - a_1");

    let o = lrpoly(&["lr", "--lambda", "1,1", "--mu", "1", "--nu", "2,1"]);
    assert_eq!(stdout(&o), "1");

    let o = lrpoly(&["lr", "--lambda", "2", "--mu", "1", "--nu", "5"]);
    assert_eq!(stdout(&o), "0");
}

#[test]
fn lr_all_methods_agree() {
    let o = lrpoly(&["lr", "--lambda", "2,1", "--mu", "1", "--nu", "2,1", "--method", "all"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let values: Vec<&str> = out.lines().map(|l| l.split_once(": ").unwrap().1).collect();
    assert_eq!(values.len(), 4);
    assert!(values.iter().all(|v| *v == values[0]));
}

#[test]
fn lr_json() {
    let o = lrpoly(&["--format", "json", "lr", "--lambda", "1", "--mu", "1", "--nu", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_array());
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn pieri_one_row() {
    let o = lrpoly(&["pieri", "--p", "2", "--e", "0", "--mu", ""]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "s(2)");
}

#[test]
fn pieri_tableau_needs_small_e() {
    let o = lrpoly(&["pieri", "--p", "1", "--e", "5", "--mu", "1", "--method", "tableau"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported hypothesis"));
}

#[test]
fn pieri_methods_match() {
    let a = lrpoly(&["pieri", "--p", "2", "--e", "1", "--mu", "2,1"]);
    let b = lrpoly(&["pieri", "--p", "2", "--e", "1", "--mu", "2,1", "--method", "tableau"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn schur_polynomial() {
    let o = lrpoly(&["schur", "--lambda", "1", "--n", "2"]);
    assert_eq!(stdout(&o), "x_1 + x_2 - a_1 - a_2");
}

#[test]
fn kostka_methods_match() {
    let args = ["kostka", "--kappa", "2,-1", "--mu", "1", "--nu", "2"];
    let a = lrpoly(&args);
    let mut with = args.to_vec();
    with.extend(["--method", "tableaux"]);
    let b = lrpoly(&with);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn classical_coefficient() {
    let o = lrpoly(&["classical", "--lambda", "2,1", "--mu", "2,1", "--nu", "3,2,1"]);
    assert_eq!(stdout(&o), "2");
}

#[test]
fn verify_ring_passes() {
    let o = lrpoly(&["verify", "--suite", "ring", "--max-weight", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("PASS"));
}

#[test]
fn verify_seed_is_deterministic() {
    let a = lrpoly(&["--format", "json", "verify", "--suite", "ring", "--max-weight", "2", "--seed", "11"]);
    let b = lrpoly(&["--format", "json", "verify", "--suite", "ring", "--max-weight", "2", "--seed", "11"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_involutions_two_rows() {
    let o = lrpoly(&["verify-involutions", "--max-weight", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS psi involution"));
}

#[test]
fn verify_involutions_three_rows_mismatch() {
    // ψ is not an involution once λ has three rows, e.g. λ = (2,2,2)
    let o = lrpoly(&["verify-involutions", "--max-weight", "6", "--max-mu", "0", "--rows", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        vec!["lr", "--lambda", "1,2", "--mu", "1", "--nu", "1"],
        vec!["lr", "--lambda", "x", "--mu", "1", "--nu", "1"],
        vec!["lr", "--lambda", "1"],
        vec!["schur", "--lambda", "0", "--n", "2"],
    ] {
        assert_eq!(lrpoly(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn thread_count_from_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_lrpoly"))
        .args(["lr", "--lambda", "1", "--mu", "1", "--nu", "1"])
        .env("LRPOLY_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_lrpoly"))
        .args(["lr", "--lambda", "1", "--mu", "1", "--nu", "1"])
        .env("LRPOLY_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
