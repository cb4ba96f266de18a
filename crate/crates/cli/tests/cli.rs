use std::path::Path;
use std::process::{Command, Output};

fn cyclefree(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclefree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn build(dir: &Path, name: &str, args: &[&str]) -> String {
    let out = dir.join(name);
    let out = out.to_str().unwrap().to_string();
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &out]);
    let o = cyclefree(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn omega3_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "o3.txt", &["--family", "omega", "--n", "3"]);
    let text = std::fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("!spec X=1,2,3 Y=1,2,3 alpha=1:1,2:2,3:3\n"));
    assert_eq!(text.lines().count(), 1 + 6);

    let o = cyclefree(&["fvector", "--in", &f]);
    assert_eq!(stdout(&o), "(6, 6)\n");

    let o = cyclefree(&["homology", "--in", &f]);
    assert_eq!(stdout(&o), "H~_-1 = 0\nH~_0 = ℤ\nH~_1 = ℤ²\n");

    let o = cyclefree(&["homology", "--in", &f, "--unreduced", "--max-dim", "0"]);
    assert_eq!(stdout(&o), "H_0 = ℤ²\n");
}

#[test]
fn delta55_torsion_and_mod_p() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "d5.txt", &["--family", "delta", "--n", "5"]);
    let o = cyclefree(&["homology", "--in", &f, "--max-dim", "2"]);
    assert!(stdout(&o).ends_with("H~_2 = ℤ₃\n"), "{}", stdout(&o));
    let o = cyclefree(&["homology", "--in", &f, "--mod", "3", "--max-dim", "2"]);
    assert!(stdout(&o).ends_with("H~_2 = (F_3)^1\n"));
    let o = cyclefree(&["homology", "--in", &f, "--mod", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn link_is_reduced_spec() {
    let dir = tempfile::tempdir().unwrap();
    let f = build(dir.path(), "o4.txt", &["--family", "omega", "--n", "4"]);
    let o = cyclefree(&["link", "--in", &f, "--vertex", "1,2"]);
    let text = stdout(&o);
    // Ω₃ on rows {2,3,4}, columns {1,3,4}, with 2 redirected to column 1
    assert!(
        text.starts_with("!spec X=2,3,4 Y=1,3,4 alpha=1:2,3:3,4:4\n"),
        "{text}"
    );
    assert_eq!(text.lines().count(), 1 + 6);
    let lk = dir.path().join("lk.txt");
    let o = cyclefree(&[
        "link",
        "--in",
        &f,
        "--vertex",
        "1,2",
        "--out",
        lk.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = cyclefree(&["fvector", "--in", lk.to_str().unwrap()]);
    assert_eq!(stdout(&o), "(6, 6)\n");
    let o = cyclefree(&["link", "--in", &f, "--vertex", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn other_families_build() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str)] = &[
        (&["--family", "omega", "--n", "2", "--m", "2"], "(6, 6)\n"),
        (&["--family", "dm", "--n", "2"], "(2, 1)\n"),
        (&["--family", "sym", "--n", "1"], "(4, 4)\n"),
        (&["--family", "fp", "--n", "3", "--cycles", "0"], "(6, 6)\n"),
        (&["--family", "theta1", "--n", "2"], "(1)\n"),
        (
            &["--family", "delta", "--n", "3", "--m", "4"],
            "(12, 36, 24)\n",
        ),
    ];
    for (i, (args, f)) in cases.iter().enumerate() {
        let path = build(dir.path(), &format!("c{i}.txt"), args);
        let o = cyclefree(&["fvector", "--in", &path]);
        assert_eq!(&stdout(&o), f, "{args:?}");
    }
    let o = cyclefree(&["build", "--family", "fp", "--n", "3", "--out", "/dev/null"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json_and_exit_codes() {
    let o = cyclefree(&[
        "verify",
        "--claim",
        "H2-Delta5",
        "--claim",
        "omega8-H4",
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0]["id"], "H2-Delta5");
    assert_eq!(arr[0]["status"], "pass");
    assert_eq!(arr[1]["status"], "skipped-long");
    for r in arr {
        let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 5);
        for k in ["id", "status", "expected", "computed", "ms"] {
            assert!(keys.contains(&k));
        }
    }
    let o = cyclefree(&["verify", "--claim", "no-such-claim"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cyclefree(&["verify", "--claim", "omega-conn-5"]);
    assert!(stdout(&o).starts_with("PASS omega-conn-5"));
}

#[test]
fn parse_errors_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "1,2 3\n").unwrap();
    let o = cyclefree(&["fvector", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}
