use std::io::Write;
use std::process::{Command, Output, Stdio};

fn kcontent(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kcontent"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn kcontent");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no `{key}` in\n{text}"))
}

const THREE_BY_TWO: &str = "# columns (1,2,3) and (4,5,6)\n1 4\n2 5\n3 6\n";

#[test]
fn content_exact() {
    let o = kcontent(&["content", "-"], THREE_BY_TWO);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(field(&text, "mode"), "exact");
    assert_eq!(field(&text, "gram_det"), "54");
    assert_eq!(field(&text, "minor_sq_sum"), "54");
    assert_eq!(field(&text, "residual"), "0");
    assert_eq!(field(&text, "verified"), "true");
    assert!(text.contains("minor {1,2} -3\n"));
    assert!(text.contains("minor {1,3} -6\n"));
    assert!(text.contains("minor {2,3} -3\n"));
}

#[test]
fn content_json_has_shared_keys() {
    let o = kcontent(&["--json", "content", "-"], "1 0\n0 1\n1 1\n");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "content");
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["gram_det"], "3");
    assert_eq!(v["residual"], "0");
    assert!(v["content"]
        .as_str()
        .unwrap()
        .starts_with("1.73205080756887"));
    assert_eq!(v["minors"].as_array().unwrap().len(), 3);
}

#[test]
fn scientific_notation_selects_float() {
    let o = kcontent(&["content", "-"], "1e0 0\n0 1\n1 1\n");
    assert_eq!(field(&stdout(&o), "mode"), "float");
    let o = kcontent(&["--mode", "exact", "content", "-"], "1e0 0\n0 1\n1 1\n");
    assert_eq!(field(&stdout(&o), "mode"), "exact");
    let o = kcontent(&["--mode", "float", "content", "-"], "0.1 0\n0 1\n");
    assert_eq!(field(&stdout(&o), "mode"), "float");
}

#[test]
fn decimals_stay_exact() {
    let o = kcontent(&["content", "-"], "0.1\n0.2\n");
    let text = stdout(&o);
    assert_eq!(field(&text, "mode"), "exact");
    assert_eq!(field(&text, "gram_det"), "1/20");
}

#[test]
fn exit_codes() {
    assert_eq!(
        kcontent(&["content", "-"], "1 2 3\n4 5 6\n").status.code(),
        Some(3)
    );
    let ragged = kcontent(&["content", "-"], "1 2\n3\n");
    assert_eq!(ragged.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&ragged.stderr).contains("line 2"));
    assert_eq!(kcontent(&["content", "-"], "1/0\n").status.code(), Some(2));
    assert_eq!(
        kcontent(&["content", "/nonexistent/file"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(kcontent(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        kcontent(&["compound", "-", "--grade", "3"], THREE_BY_TWO)
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        kcontent(&["degua", "1", "0", "1"], "").status.code(),
        Some(3)
    );
    assert_eq!(
        kcontent(&["degua", "1", "x", "1"], "").status.code(),
        Some(2)
    );
}

#[test]
fn minors_lists_maximal_and_graded() {
    let o = kcontent(&["minors", "-"], THREE_BY_TWO);
    assert_eq!(stdout(&o), "{1,2} -3 3\n{1,3} -6 6\n{2,3} -3 3\n");
    let o = kcontent(&["minors", "-", "--grade", "1"], THREE_BY_TWO);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 6);
    assert!(text.starts_with("{1} {1} 1\n{1} {2} 4\n"));
}

#[test]
fn compound_output_round_trips_as_a_matrix() {
    let o = kcontent(&["compound", "-", "--grade", "2"], THREE_BY_TWO);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# rows: {1,2} {1,3} {2,3}"));
    let m = kcontent(&["gram", "-"], &text);
    assert_eq!(m.status.code(), Some(0));
    assert!(stdout(&m).contains("# det 54\n"));

    let zero = kcontent(&["compound", "-", "--grade", "0"], THREE_BY_TWO);
    assert!(stdout(&zero).ends_with("\n1\n"));
}

#[test]
fn gram_reports_leading_minors() {
    let o = kcontent(&["gram", "-"], THREE_BY_TWO);
    let text = stdout(&o);
    assert!(text.contains("14 32\n32 77\n"));
    assert!(text.contains("# det 54\n"));
    assert!(text.contains("# leading_principal_minors 14 54\n"));
}

#[test]
fn verify_is_reproducible() {
    let a = kcontent(
        &[
            "verify",
            "--suite",
            "pythagorean",
            "--trials",
            "100",
            "--seed",
            "7",
        ],
        "",
    );
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("100/100 passed"));
    let b = kcontent(
        &[
            "verify",
            "--suite",
            "pythagorean",
            "--trials",
            "100",
            "--seed",
            "7",
        ],
        "",
    );
    assert_eq!(a.stdout, b.stdout);
    let f = kcontent(
        &[
            "verify",
            "--suite",
            "functoriality",
            "--trials",
            "50",
            "--seed",
            "1",
        ],
        "",
    );
    assert_eq!(f.status.code(), Some(0));
    assert_eq!(
        kcontent(&["verify", "--suite", "nosuch"], "").status.code(),
        Some(2)
    );
}

#[test]
fn measure_shapes() {
    let o = kcontent(&["measure", "patch()", "--resolution", "1"], "");
    assert_eq!(field(&stdout(&o), "content"), "1");
    let o = kcontent(
        &["--json", "measure", "sphere(r=2)", "--resolution", "512"],
        "",
    );
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let got: f64 = v["content"].as_str().unwrap().parse().unwrap();
    let want = 16.0 * std::f64::consts::PI;
    assert!((got - want).abs() / want <= 1e-4);
    assert_eq!(
        kcontent(&["measure", "sphere()", "--resolution", "0"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(kcontent(&["measure", "klein()"], "").status.code(), Some(2));
}

#[test]
fn simplex_volumes() {
    let tri = kcontent(&["simplex", "-"], "0 0\n1 0\n0 1\n");
    assert_eq!(field(&stdout(&tri), "content_sq"), "1/4");
    assert_eq!(field(&stdout(&tri), "content"), "0.5");
    let tet = kcontent(&["simplex", "-"], "0 0 0\n1 0 0\n0 1 0\n0 0 1\n");
    assert_eq!(field(&stdout(&tet), "content_sq"), "1/36");
}

#[test]
fn degua_unit_legs() {
    let o = kcontent(&["degua", "1", "1", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3/4 = 3/4"));
    let o = kcontent(&["--mode", "float", "degua", "1", "1", "1"], "");
    assert!(stdout(&o).contains("0.75 = 0.75"));
    let o = kcontent(&["degua", "3", "4", "5"], "");
    assert!(stdout(&o).contains("769/4 = 769/4"));
}
