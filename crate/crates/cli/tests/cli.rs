use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hopfcyc"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn compare_agrees_on_group_algebra() {
    let z2 = fixture("z2.json");
    let o = run(&["compare", z2.to_str().unwrap(), "--degree", "4"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("== cohomology of Cyc(A) [ok]"), "{out}");
    // HC^n(kZ/2) has dimension 2 in even degrees and 0 in odd ones
    assert!(out.contains("0          2      2"), "{out}");
    assert!(out.contains("1          0      0"), "{out}");
}

#[test]
fn compare_over_a_prime_field() {
    let z3 = fixture("z3.json");
    let o = run(&["compare", z3.to_str().unwrap(), "--degree", "3", "--field", "5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn char_map_routes_agree_on_z2() {
    let (p, t) = (fixture("pairing-z2.json"), fixture("trace-z2.json"));
    let o = run(&["char-map", p.to_str().unwrap(), t.to_str().unwrap(), "--degree", "4"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.contains("direct formula and pullback agree"), "{out}");
}

#[test]
fn char_map_routes_agree_on_sweedler() {
    let (p, t) = (fixture("pairing-sweedler.json"), fixture("trace-sweedler.json"));
    let o = run(&["char-map", p.to_str().unwrap(), t.to_str().unwrap(), "--degree", "2", "--buffer", "1"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.contains("gamma of class 0 in degree 0 (bicomplex)"), "{out}");
}

#[test]
fn sequential_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = fixture("dual-numbers-z2.json");
    let mut outputs = Vec::new();
    for (k, extra) in [&["--sequential"][..], &["--sequential"][..], &[][..]].iter().enumerate() {
        let json = dir.path().join(format!("{k}.json"));
        let mut args = vec!["build", a.to_str().unwrap(), "--degree", "3", "--output", json.to_str().unwrap()];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        outputs.push((o.stdout, std::fs::read(&json).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0].0, outputs[2].0, "parallel text output differs");
}

#[test]
fn json_outcome_records_the_job() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let z2 = fixture("z2.json");
    let o = run(&["cohomology", z2.to_str().unwrap(), "--degree", "3", "--model", "mixed", "--output", json.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&json).unwrap()).unwrap();
    assert_eq!(v["job"]["command"], "cohomology");
    assert_eq!(v["job"]["model"], "mixed");
    assert_eq!(v["ok"], true);
    assert_eq!(v["sections"][0]["data"]["tables"][0]["degrees"], serde_json::json!([2, 0, 2]));
}

#[test]
fn controls_fail_with_named_identities() {
    for (control, identity) in [
        ("corrupted-antipode", "antipode"),
        ("corrupted-b", "bB + Bb = 0"),
        ("dropped-factor", "failed identity"),
    ] {
        let o = run(&["check", "--control", control, "--degree", "2"]);
        let out = stdout(&o);
        assert_eq!(code(&o), 1, "{control}: {out}");
        assert!(out.lines().any(|l| l.contains("failed identity") && l.contains(identity)), "{control}: {out}");
    }
}

#[test]
fn control_files_fail_their_checks() {
    for (file, identity) in [
        ("corrupted-antipode-z2.json", "antipode"),
        ("regular-coalgebra-z2.json", "compatib"),
        ("nonassociative.json", "associativ"),
    ] {
        let path = fixture("controls").join(file);
        let o = run(&["check", path.to_str().unwrap(), "--degree", "2"]);
        let out = stdout(&o);
        assert_eq!(code(&o), 1, "{file}: {out}");
        assert!(out.lines().any(|l| l.contains("failed identity") && l.contains(identity)), "{file}: {out}");
    }
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"kind\": \"hopf\", \"name\": ").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line "));
    assert_eq!(code(&run(&["compare", fixture("z2.json").to_str().unwrap(), "--field", "91"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&run(&["build", missing.to_str().unwrap()])), 2);
}

#[test]
fn prime_fields_reject_rational_only_files() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("z2.json")).unwrap().replace("\"field\": \"Q\"", "\"field\": \"7\"");
    let f7 = dir.path().join("z2-f7.json");
    std::fs::write(&f7, text).unwrap();
    assert_eq!(code(&run(&["compare", f7.to_str().unwrap(), "--field", "7", "--degree", "3"])), 0);
    assert_eq!(code(&run(&["compare", f7.to_str().unwrap(), "--field", "5", "--degree", "3"])), 2);
}

#[test]
fn fixtures_command_reproduces_the_shipped_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    for sub in ["", "controls"] {
        let shipped = fixture(sub);
        let mut names: Vec<_> = std::fs::read_dir(&shipped)
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|e| e == "json"))
            .collect();
        names.sort();
        assert!(!names.is_empty());
        for p in names {
            let fresh = dir.path().join(sub).join(p.file_name().unwrap());
            assert_eq!(std::fs::read_to_string(&p).unwrap(), std::fs::read_to_string(&fresh).unwrap(), "{}", p.display());
        }
    }
}

#[test]
fn pair_with_comodule_coalgebra_uses_the_chosen_form() {
    let z = fixture("graded-dual-z2.json");
    let shifted = run(&["pair", z.to_str().unwrap(), "--degree", "3"]);
    assert_eq!(code(&shifted), 0, "{}", stdout(&shifted));
    let printed = run(&["pair", z.to_str().unwrap(), "--degree", "3", "--xi-form", "printed"]);
    let out = stdout(&printed);
    assert_eq!(code(&printed), 1, "{out}");
    assert!(out.contains("failed identity: xi: commutes with faces"), "{out}");
}

#[test]
fn pair_with_crossed_product_algebra() {
    let (a, b, m) = (fixture("dual-numbers-z2.json"), fixture("group-comodule-algebra-z2.json"), fixture("sign-coefficients-z2.json"));
    let o = run(&["pair", a.to_str().unwrap(), b.to_str().unwrap(), m.to_str().unwrap(), "--degree", "3"]);
    let out = stdout(&o);
    assert_eq!(code(&o), 0, "{out}");
    assert!(out.contains("== beta [ok]"), "{out}");
    assert!(out.contains("crossed cup with trace 0, degree 0"), "{out}");
}
