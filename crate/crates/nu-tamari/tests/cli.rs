use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nu-tamari"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn triangles_text_and_json() {
    let o = cli(&["triangles", "--nu", "EENEN"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.contains("F = 5*x^2 + 3*x*y + y^2 + 8*x + 3*y + 3"),
        "{text}"
    );
    assert!(
        text.contains("H = x^2*y^2 + x^2*y + x^2 + 2*x*y + 3*x + 1"),
        "{text}"
    );
    let text = stdout(&cli(&["triangles", "--nu", "N"]));
    assert!(text.contains("F = 1\nH = 1"), "{text}");
    let o = cli(&["triangles", "--nu", "EENEN", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["deg"], 2);
    assert_eq!(v["F"]["vars"], serde_json::json!(["x", "y"]));
    assert_eq!(v["F"]["terms"][0], serde_json::json!([[2, 0], "5"]));
}

#[test]
fn verify_exit_codes() {
    let o = cli(&["verify", "--nu", "ENEENEN"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("ok"));
    let o = cli(&["verify", "--nu", "EENEN", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = cli(&["verify", "--sweep", "11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    let o = cli(&["verify", "--nu", "EENEN", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["fh", "schroder", "fvector", "hvector", "reciprocity"] {
        assert_eq!(v["checks"][key], true, "{key}");
    }
}

#[test]
fn verify_sweep_is_ordered() {
    let o = Command::new(env!("CARGO_BIN_EXE_nu-tamari"))
        .args(["verify", "--sweep", "6"])
        .env("NU_TAMARI_THREADS", "4")
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = stdout(&o);
    let words: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("ok"))
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    let expected: Vec<String> = nu_tamari::sweep::words_up_to(6)
        .iter()
        .map(ToString::to_string)
        .collect();
    assert_eq!(words, expected);
    assert!(text.ends_with("126/126 passed\n"));
}

#[test]
fn exports_are_deterministic() {
    let a = cli(&[
        "export", "--nu", "EENEN", "--what", "tamari", "--format", "dot",
    ]);
    let b = cli(&[
        "export", "--nu", "EENEN", "--what", "tamari", "--format", "dot",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).matches("[label=").count(), 9);
    let o = cli(&[
        "export", "--nu", "ENEENEN", "--what", "asso", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([23, 39, 20, 3]));
    assert_eq!(v["faces"].as_array().unwrap().len(), 85);
    let o = cli(&[
        "export", "--nu", "EENEN", "--what", "tc", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["f_vector"].as_array().unwrap().len(), 7);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tc.dot");
    let o = cli(&[
        "export",
        "--nu",
        "EENEN",
        "--what",
        "tc",
        "--format",
        "dot",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(path).unwrap().starts_with("graph"));
}

#[test]
fn markings_and_posets() {
    let text = stdout(&cli(&["marking", "--nu", "ENENEN", "--kind", "rotation"]));
    assert!(text.contains("marked = 14"), "{text}");
    assert!(
        text.contains("H = x^3*y^3 + 3*x^2*y^2 + 2*x^2*y + x^2 + 3*x*y + 3*x + 1"),
        "{text}"
    );
    let text = stdout(&cli(&[
        "marking",
        "--nu",
        "ENENEN",
        "--kind",
        "atom-perspectivity",
    ]));
    assert!(text.contains("marked = 15"), "{text}");
    assert!(
        text.contains("H = x^3*y^3 + 3*x^2*y^2 + 3*x^2*y + 3*x*y + 3*x + 1"),
        "{text}"
    );
    let text = stdout(&cli(&["marking", "--nu", "ENEN", "--kind", "multivalley"]));
    assert!(text.contains("k = 2"), "{text}");
    let o = cli(&["poset", "--fuzz", "200", "--seed", "42"]);
    assert!(o.status.success(), "{}", stdout(&o));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("chain.json");
    std::fs::write(
        &good,
        r#"{"elements":["0","1"],"covers":[["0","1",1]],"k":1}"#,
    )
    .unwrap();
    let o = cli(&[
        "poset",
        "--input",
        good.to_str().unwrap(),
        "--verify",
        "--triangles",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("F = x + y + 1"), "{}", stdout(&o));
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        "{\"elements\": [\"a\"],\n \"covers\": [[\"a\", \"a\", 0]], \"k\": 1}",
    )
    .unwrap();
    let o = cli(&["poset", "--input", bad.to_str().unwrap(), "--verify"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("covers[0]: self loop"),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}
