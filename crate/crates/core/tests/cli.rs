use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_affine-schubert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn binary_matches_golden_dim() {
    let (code, out, _) = run(&[
        "dim",
        "--type",
        "C",
        "--rank",
        "2",
        "--element",
        "t:-1,0|id",
        "--left",
        "1,2",
        "--right",
        "1,2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/dim_c2.txt"));
}

#[test]
fn binary_matches_golden_unitary() {
    let (code, out, _) = run(&["unitary", "2", "2", "--output", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/unitary_2_2.json"));
}

#[test]
fn binary_exit_codes() {
    assert_eq!(
        run(&["length", "--type", "C", "--rank", "2", "--element", "w:9"]).0,
        2
    );
    assert_eq!(
        run(&["length", "--type", "E", "--rank", "6", "--element", "id"]).0,
        2
    );
    assert_eq!(
        run(&[
            "dim",
            "--type",
            "C",
            "--rank",
            "2",
            "--element",
            "id",
            "--left",
            "0,1,2"
        ])
        .0,
        2
    );
    assert_eq!(run(&["nonsense"]).0, 2);
    let (code, _, err) = run(&[
        "resolve",
        "--type",
        "C",
        "--rank",
        "2",
        "--element",
        "id",
        "--right",
        "1,2",
    ]);
    assert_eq!(code, 0, "{err}");
}

#[test]
fn text_outputs() {
    let word = run(&[
        "word",
        "--type",
        "C",
        "--rank",
        "2",
        "--element",
        "t:1,0|id",
    ]);
    assert_eq!(word.1, "w:0,1,2,1\n");
    let mult = run(&[
        "mult",
        "--type",
        "C",
        "--rank",
        "2",
        "--element",
        "w:0",
        "--other",
        "w:1,0",
    ]);
    assert_eq!(mult.1, "w:0,1,0\nt:1,1|w:2,1,2\n");
    let bruhat = run(&[
        "bruhat",
        "--type",
        "C",
        "--rank",
        "2",
        "--element",
        "w:0",
        "--other",
        "w:1,0",
    ]);
    assert_eq!(bruhat.1, "true\n");
    let reps = run(&[
        "enumerate",
        "--type",
        "C",
        "--rank",
        "2",
        "--left",
        "1,2",
        "--right",
        "1,2",
        "--bound",
        "6",
    ]);
    assert_eq!(reps.1.lines().count(), 3);
}

#[test]
fn strata_json_and_dot_agree() {
    let base = [
        "strata",
        "--type",
        "A",
        "--rank",
        "2",
        "--element",
        "t:-1,0,1|id",
        "--left",
        "1,2",
        "--right",
        "1,2",
    ];
    let (_, json, _) = run(&[&base[..], &["--output", "json"]].concat());
    let (_, dot, _) = run(&[&base[..], &["--output", "dot"]].concat());
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["dims"], serde_json::json!([0, 4]));
    assert_eq!(
        dot.matches("->").count(),
        v["covers"].as_array().unwrap().len()
    );
}
