use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p3embed")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K4: &str = "\
vertices 4
outer 0 1 2
edge 0 1
edge 1 2
edge 2 0
edge 0 3
edge 1 3
edge 2 3
point 0 0
point 9 0
point 0 9
point 2 2
";

#[test]
fn gen_embed_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    let map = dir.path().join("map.txt");
    let svg = dir.path().join("out.svg");
    let o = run(&["gen", "--n", "40", "--seed", "3", "--yes", "--out", s(&inst)]);
    assert_eq!(code(&o), 0, "{o:?}");

    let o = run(&["embed", s(&inst), "--svg", s(&svg), "--stats"]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert_eq!(stdout(&o).lines().count(), 40);
    assert!(String::from_utf8_lossy(&o.stderr).contains("candidates_checked"));
    assert!(fs::read_to_string(&svg).unwrap().contains("<svg"));
    fs::write(&map, stdout(&o)).unwrap();

    let o = run(&["verify", s(&inst), s(&map)]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert_eq!(stdout(&o).trim(), "valid");

    let base = run(&["embed", s(&inst), "--mode", "baseline", "--backend", "brute"]);
    assert_eq!(stdout(&base), fs::read_to_string(&map).unwrap());
}

#[test]
fn json_instances_and_mappings() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.json");
    let map = dir.path().join("map.json");
    assert_eq!(
        code(&run(&["gen", "--n", "12", "--yes", "--collinear", "--coord-bound", "20", "--json", "--out", s(&inst)])),
        0
    );
    let o = run(&["embed", s(&inst), "--json"]);
    assert_eq!(code(&o), 0, "{o:?}");
    fs::write(&map, stdout(&o)).unwrap();
    let o = run(&["verify", s(&inst), s(&map), "--json"]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert!(stdout(&o).contains("\"valid\": true"));
}

#[test]
fn not_embeddable_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("quad.txt");
    fs::write(&inst, K4.replace("point 2 2", "point 9 9")).unwrap();
    let o = run(&["embed", s(&inst)]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).trim(), "not embeddable: hull_not_three");
}

#[test]
fn invalid_mapping_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("k4.txt");
    let map = dir.path().join("bad.txt");
    fs::write(&inst, K4).unwrap();
    fs::write(&map, "0 0 0\n1 9 0\n2 2 2\n3 0 9\n").unwrap();
    let o = run(&["verify", s(&inst), s(&map)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("broken.txt");
    fs::write(&inst, "vertices 4\nedge 0 1\n").unwrap();
    assert_eq!(code(&run(&["embed", s(&inst)])), 2);
    assert_eq!(code(&run(&["embed", "/nonexistent/file"])), 2);
    assert_eq!(code(&run(&["embed"])), 2);
    fs::write(&inst, K4.replace("point 9 0", "point 9000000 0")).unwrap();
    assert_eq!(code(&run(&["embed", s(&inst), "--coord-bound", "1000"])), 2);
}

#[test]
fn embed_general_uses_a_superset() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("k4.txt");
    fs::write(&inst, format!("{K4}point 8 8\npoint 1 5\n")).unwrap();
    let o = run(&["embed-general", s(&inst), "--stats"]);
    assert_eq!(code(&o), 0, "{o:?}");
    assert_eq!(stdout(&o).lines().count(), 4);
    let map = dir.path().join("map.txt");
    fs::write(&map, stdout(&o)).unwrap();
    assert_eq!(code(&run(&["verify", s(&inst), s(&map), "--generalized"])), 0);
    // Exact mode needs as many points as vertices.
    assert_eq!(code(&run(&["verify", s(&inst), s(&map)])), 2);
}

#[test]
fn bench_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.json");
    let o = run(&["bench", "--suite", "sizes=8,16;reps=2;seed=1;modes=baseline,improved,general", "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{o:?}");
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(report.get("summary").is_some());
    assert_eq!(code(&run(&["bench", "--suite", "sizes=;reps=x"])), 2);
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "--n", "25", "--seed", "9"]);
    let b = run(&["gen", "--n", "25", "--seed", "9"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("expected unknown"));
}
