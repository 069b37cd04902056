//! The `leibniz` binary end to end: exit codes, fixtures and JSON outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leibniz::catalog::{example_2_11, sl2_semidirect, BuildParams};
use leibniz::cli::{analyze, cmd_build, to_pretty, AlgebraFile};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("leibniz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn build_then_verify() {
    let path = scratch("ex211.json");
    let out = run(&["build", "example-2.11", "-o", path_str(&path)]);
    assert_eq!(out.status.code(), Some(0));
    let v = run(&["verify", path_str(&path)]);
    assert_eq!(v.status.code(), Some(0));
}

#[test]
fn corrupted_constant_is_reported() {
    let mut f = AlgebraFile::from_algebra(&example_2_11(), None);
    // [x1, f1] = x2 becomes 2 x2
    let e = f
        .brackets
        .iter_mut()
        .find(|(i, j, k, _)| (*i, *j, *k) == (6, 2, 7))
        .unwrap();
    e.3 = leibniz::exactla::int(2);
    let path = scratch("corrupt.json");
    std::fs::write(&path, f.to_json_string()).unwrap();
    let out = run(&["verify", path_str(&path)]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("defect (")), "{text}");
}

#[test]
fn malformed_input_exits_2() {
    let path = scratch("bad.json");
    std::fs::write(&path, "{\"dim\": 2, \"labels\": [\"a\"]").unwrap();
    assert_eq!(run(&["verify", path_str(&path)]).status.code(), Some(2));
    assert_eq!(
        run(&["analyze", "/nonexistent/file.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["build", "no-such-algebra"]).status.code(), Some(2));
}

#[test]
fn analyze_ten_dimensional_fixture() {
    let out = run(&["analyze", path_str(&fixture("example_2_11.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dim_I"], 4);
    assert_eq!(v["summand_count"], 1);
    assert_eq!(v["der_dim"], 7);
    assert_eq!(v["prop_2_10_ok"], true);
}

#[test]
fn analyze_sl2() {
    let v = json_of(&run(&["analyze", path_str(&fixture("sl2.json"))]));
    assert_eq!(v["is_lie"], true);
    assert_eq!(v["dim_I"], 0);
    assert_eq!(v["summand_count"], 1);
}

#[test]
fn analyze_direct_sum_of_fixtures() {
    let a = AlgebraFile::parse(&std::fs::read_to_string(fixture("example_2_11.json")).unwrap())
        .unwrap()
        .to_algebra()
        .unwrap();
    let b = sl2_semidirect(&[2]).unwrap();
    let path = scratch("sum.json");
    std::fs::write(
        &path,
        AlgebraFile::from_algebra(&a.direct_sum(&b), None).to_json_string(),
    )
    .unwrap();
    let v = json_of(&run(&["analyze", path_str(&path)]));
    assert_eq!(v["summand_count"], 2);
}

#[test]
fn derivations_of_sl2_v2() {
    let path = scratch("sl2v2.json");
    assert_eq!(
        run(&["build", "sl2-semidirect", "--m", "2", "-o", path_str(&path)])
            .status
            .code(),
        Some(0)
    );
    let out = run(&["derivations", path_str(&path)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["der_dim"], 5);
    assert_eq!(v["split"]["dims"], serde_json::json!([3, 1, 1]));
    assert_eq!(v["formula"]["structural_dim"], 5);
}

#[test]
fn transpose_not_extendable() {
    let out = run(&[
        "automorphisms",
        path_str(&fixture("sl3_standard.json")),
        "--extend",
        "sl3-transpose",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["verdict"], "not extendable");
    let inner = json_of(&run(&[
        "automorphisms",
        path_str(&fixture("sl3_standard.json")),
        "--extend",
        "exp-ad:0",
    ]));
    assert_eq!(inner["extendable"], true);
}

#[test]
fn check_and_factor() {
    let id: Vec<Vec<i64>> = (0..10)
        .map(|i| (0..10).map(|j| i64::from(i == j)).collect())
        .collect();
    let id_path = scratch("id.json");
    std::fs::write(&id_path, serde_json::to_string(&id).unwrap()).unwrap();
    let zero_path = scratch("zero.json");
    std::fs::write(
        &zero_path,
        serde_json::to_string(&vec![vec![0; 10]; 10]).unwrap(),
    )
    .unwrap();
    let f = path_str(&fixture("example_2_11.json")).to_string();
    assert_eq!(
        run(&["automorphisms", &f, "--check", path_str(&id_path)])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["automorphisms", &f, "--check", path_str(&zero_path)])
            .status
            .code(),
        Some(1)
    );
    let out = run(&["automorphisms", &f, "--factor", path_str(&id_path)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["psi"][0][0], "1");
    assert_eq!(
        run(&["automorphisms", &f, "--factor", path_str(&zero_path)])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn as_printed_constants_fail_verification() {
    let path = scratch("printed.json");
    let out = run(&[
        "build",
        "example-3.6",
        "--m",
        "2",
        "--n",
        "1",
        "--as-printed",
        "-o",
        path_str(&path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["verify", path_str(&path)]).status.code(), Some(1));
}

#[test]
fn shipped_fixtures_match_build() {
    for (name, params, file) in [
        ("example-2.11", BuildParams::default(), "example_2_11.json"),
        (
            "example-3.6",
            BuildParams {
                m: Some(2),
                n: Some(1),
                ..Default::default()
            },
            "example_3_6_2_1.json",
        ),
        ("sl3-standard", BuildParams::default(), "sl3_standard.json"),
        ("sl2", BuildParams::default(), "sl2.json"),
    ] {
        let built = cmd_build(name, &params);
        assert_eq!(
            built.stdout,
            std::fs::read_to_string(fixture(file)).unwrap(),
            "{file}"
        );
    }
}

#[test]
fn round_trip_matches_in_memory_analysis() {
    let l = example_2_11();
    let text = AlgebraFile::from_algebra(&l, None).to_json_string();
    let parsed = AlgebraFile::parse(&text).unwrap().to_algebra().unwrap();
    assert_eq!(
        to_pretty(&analyze(&parsed).to_json()),
        to_pretty(&analyze(&l).to_json())
    );
}
