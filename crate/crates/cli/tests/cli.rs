use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_type_c_words() {
    let o = run(&["compute", "--family", "schubert", "--type", "C", "--perm", "-2,-1", "--n", "2", "--floor", "-6", "--form", "words"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).split(" + ").any(|t| t.trim() == "4*x[-1]*x[0]^2"));
}

#[test]
fn compute_involution_pipe_dreams() {
    let o = run(&["compute", "--family", "grothendieck", "--type", "invol", "--perm", "1,4,3,2", "--n", "4", "--form", "pipedream"]);
    assert_eq!(o.status.code(), Some(0));
    let words = run(&["compute", "--family", "grothendieck", "--type", "invol", "--perm", "1,4,3,2", "--n", "4", "--form", "words"]);
    assert_eq!(stdout(&o), stdout(&words));
    assert!(stdout(&o).starts_with("2*x[1]*x[2] + x[1]*x[3] + x[1]^2 + x[2]*x[3] + x[2]^2"));
}

#[test]
fn compute_identity_is_one() {
    let o = run(&["compute", "--family", "schubert", "--type", "A", "--perm", "1,2,3", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn compute_forms_agree() {
    let base = ["compute", "--family", "grothendieck", "--type", "A", "--perm", "1,3,2", "--n", "3", "--beta", "2"];
    let words = run(&[&base[..], &["--form", "words"]].concat());
    let product = run(&[&base[..], &["--form", "product"]].concat());
    assert_eq!(stdout(&words), stdout(&product));
    assert_eq!(stdout(&words).trim(), "x[1] + x[2] + b*x[1]*x[2]");
}

#[test]
fn compute_json_output() {
    let o = run(&["compute", "--type", "A", "--perm", "2,1", "--n", "2", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"][0]["coeff"], "1");
    assert_eq!(v["terms"][0]["x"]["1"], 1);
}

#[test]
fn specialize_type_a_both() {
    let o = run(&["specialize", "--type", "A", "--perm", "2,1,4,3", "--n", "4", "--side", "both", "--cutoff", "-4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let expected = "q^2 + 2*q + 3 + 4*q^-1 + 5*q^-2 + 6*q^-3 + 7*q^-4 + O(q^-5)";
    assert!(s.contains(&format!("lhs: {expected}")));
    assert!(s.contains(&format!("rhs: {expected}")));
    assert!(s.contains("verdict: PASS"));
}

#[test]
fn specialize_type_d_rhs() {
    let o = run(&["specialize", "--type", "D", "--perm", "-1,2,3,-4", "--n", "4", "--side", "rhs", "--cutoff", "-5", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let coeffs: Vec<String> = (-5..=0)
        .rev()
        .map(|e: i64| v["rhs"]["coeffs"][e.to_string()][0]["coeff"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(coeffs, ["1", "3", "7", "15", "27", "46"]);
}

#[test]
fn specialize_identity() {
    let o = run(&["specialize", "--type", "C", "--perm", "1,2", "--n", "2", "--cutoff", "-3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lhs: 1 + O(q^-4)"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["compute", "--type", "A", "--perm", "1,x", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--tpye", "A"]).status.code(), Some(2));
    assert_eq!(run(&["compute", "--type", "A", "--perm", "-1,2", "--n", "3"]).status.code(), Some(3));
    assert_eq!(run(&["compute", "--type", "fpf", "--perm", "2,1,3", "--n", "3"]).status.code(), Some(3));
    let o = run(&["specialize", "--type", "A", "--perm", "3,2,1", "--n", "3", "--floor", "0", "--cutoff", "-5"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("soundness bound"));
}

#[test]
fn words_listing() {
    let o = run(&["words", "--type", "fpf", "--perm", "4,3,2,1", "--n", "4"]);
    assert_eq!(stdout(&o), "2,1\n2,3\n");
    let o = run(&["words", "--type", "A", "--perm", "2,1,4,3", "--n", "4", "--stat", "comaj,sum"]);
    assert_eq!(stdout(&o), "1,3 comaj=1 sum=4\n3,1 comaj=0 sum=4\n");
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "--suite", "macdonald", "--n", "4"][..],
        &["verify", "--suite", "involution", "--n", "4"][..],
        &["verify", "--suite", "all", "--n", "1"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn verify_json_is_stable() {
    let a = run(&["verify", "--suite", "bcratio", "--n", "2", "--out", "json"]);
    let b = run(&["verify", "--suite", "bcratio", "--n", "2", "--out", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(v["check"], "bc_ratio");
    assert_eq!(v["verdict"], "pass");
    assert!(v["diff"].as_array().unwrap().is_empty());
}
