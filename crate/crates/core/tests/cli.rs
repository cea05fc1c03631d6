use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn hoalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hoalg")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into(), String::from_utf8_lossy(&out.stderr).into())
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

#[test]
fn fixtures_have_expected_verdicts() {
    for (name, code) in [
        ("dual_numbers.json", 0),
        ("matrix_span.json", 0),
        ("non_associative_pre_lie.json", 0),
        ("dga.json", 0),
        ("nilpotent_ternary.json", 0),
        ("dual_numbers_perturbed.json", 1),
    ] {
        let (got, out, err) = hoalg(&["check", &fixture(name)]);
        assert_eq!(got, code, "{name}: {out}{err}");
    }
}

#[test]
fn perturbed_fixture_prints_witness() {
    let (code, out, _) = hoalg(&["check", &fixture("dual_numbers_perturbed.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("witness (t, 1, 1) -> t coeff 2"), "{out}");
    assert!(out.lines().last().unwrap().starts_with("FAILED"), "{out}");
}

#[test]
fn non_associative_pre_lie_fails_assoc() {
    let (code, out, _) = hoalg(&["check", &fixture("non_associative_pre_lie.json"), "--flavor", "assoc"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"version": 1, "space": [{"label": "x", "degree": 0}], "convention": "unhat",
        "operations": [{"arity": 2, "entries": [{"inputs": ["x", "y"], "output": [{"label": "x", "coeff": "1"}]}]}]}"#)
        .unwrap();
    let (code, _, err) = hoalg(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("$.operations[0].entries[0]"), "{err}");

    fs::write(&bad, "{not json").unwrap();
    assert_eq!(hoalg(&["check", bad.to_str().unwrap()]).0, 2);
    assert_eq!(hoalg(&["check", "/nonexistent/doc.json"]).0, 2);
    assert_eq!(hoalg(&["derive", &fixture("dual_numbers.json"), "no-such-functor"]).0, 2);
    assert_eq!(hoalg(&["frobnicate"]).0, 2);
    assert_eq!(hoalg(&["check", &fixture("dual_numbers.json"), "--convention", "hat"]).0, 2);
}

#[test]
fn suspend_then_desuspend_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let hat = dir.path().join("hat.json");
    let back = dir.path().join("back.json");
    let src = fixture("dga.json");
    assert_eq!(hoalg(&["derive", &src, "suspend", "-o", hat.to_str().unwrap()]).0, 0);
    assert_eq!(hoalg(&["check", hat.to_str().unwrap()]).0, 0);
    assert_eq!(hoalg(&["derive", hat.to_str().unwrap(), "desuspend", "-o", back.to_str().unwrap()]).0, 0);
    assert_eq!(fs::read_to_string(&src).unwrap(), fs::read_to_string(&back).unwrap());
}

#[test]
fn derive_refuses_non_associative_input() {
    let (code, out, err) = hoalg(&["derive", &fixture("non_associative_pre_lie.json"), "commutator-alpha"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("FAIL"), "{err}");
}

#[test]
fn nary_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let emb = dir.path().join("emb.json");
    let (code, _, err) = hoalg(&["derive", &fixture("nilpotent_ternary.json"), "nary-embed", "-o", emb.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = hoalg(&["check", emb.to_str().unwrap(), "--flavor", "assoc"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn generate_is_deterministic() {
    let args = ["generate", "--seed", "7", "--dim", "3", "--arities", "1,2,3", "--min-degree", "-1"];
    let (c1, a, _) = hoalg(&args);
    let (c2, b, _) = hoalg(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let (_, c, _) = hoalg(&["generate", "--seed", "8", "--dim", "3", "--arities", "1,2,3", "--min-degree", "-1"]);
    assert_ne!(a, c);
}

#[test]
fn json_reports_parse() {
    for args in [vec!["selftest", "--format", "json"], vec!["coderive", "FIX", "--format", "json"]] {
        let f = fixture("dual_numbers.json");
        let args: Vec<&str> = args.iter().map(|a| if *a == "FIX" { f.as_str() } else { a }).collect();
        let (code, out, err) = hoalg(&args);
        assert_eq!(code, 0, "{out}{err}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(v["checks"].as_array().is_some_and(|c| !c.is_empty()));
    }
}
