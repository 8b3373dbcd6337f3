use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symdesign")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const NAMES: [&str; 8] = [
    "fano_complement",
    "paley_11_5_2",
    "paley_complement_11_6_3",
    "unitary_45_12_3",
    "imprimitive_45_12_3",
    "biplane16_ea",
    "biplane16_z2z8",
    "biplane16_q8z2",
];

#[test]
fn eliminate_single_query() {
    let o = run(&["eliminate", "--v", "11", "--bound", "60"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(5,2) (6,3)\n");
    let o = run(&["eliminate", "--v", "28431", "--bound", "645120"]);
    assert_eq!(stdout(&o), "EMPTY\n");
    let o = run(&["eliminate", "--v", "11", "--bound", "60", "--lambda", "3"]);
    assert_eq!(stdout(&o), "(6,3)\n");
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in NAMES {
        let f = dir.path().join(format!("{name}.des"));
        let o = run(&["construct", name, "-o", path_str(&f)]);
        assert_eq!(code(&o), 0, "{name}");
        let o = run(&["verify", path_str(&f)]);
        assert_eq!(code(&o), 0, "{name}");
        assert!(stdout(&o).starts_with('('), "{name}");
    }
}

#[test]
fn flagtest_on_the_imprimitive_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("imprim45.des");
    assert_eq!(code(&run(&["construct", "imprimitive_45_12_3", "-o", path_str(&f)])), 0);
    let o = run(&["flagtest", path_str(&data("sigma45.grp")), path_str(&f)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "flag-transitive: yes; primitive: no (9×5 system)\n");
}

#[test]
fn flagtest_rejects_a_group_that_does_not_act() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("u.des");
    assert_eq!(code(&run(&["construct", "unitary_45_12_3", "-o", path_str(&f)])), 0);
    let o = run(&["flagtest", path_str(&data("sigma45.grp")), path_str(&f)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("flag-transitive: no"));
}

#[test]
fn verify_reports_block_count_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("garbage.des");
    std::fs::write(&f, "v 7\n1,2,3\n2,3,4\n3,4,5\n4,5,6\n").unwrap();
    let o = run(&["verify", path_str(&f)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("block count mismatch"));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(code(&run(&["verify", "/nonexistent/x.des"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.des");
    std::fs::write(&f, "w 7\n1,2\n").unwrap();
    assert_eq!(code(&run(&["verify", path_str(&f)])), 4);
    let g = dir.path().join("bad.grp");
    std::fs::write(&g, "degree 4\n(1,2,5)\n").unwrap();
    assert_eq!(code(&run(&["group", "order", path_str(&g)])), 4);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["verify", "--bogus", "x"])), 2);
    assert_eq!(code(&run(&["eliminate", "--table", "T1", "--v", "7"])), 2);
    assert_eq!(code(&run(&["eliminate", "--table", "T99"])), 2);
    assert_eq!(code(&run(&["construct", "nonsense"])), 2);
    assert_eq!(code(&run(&["families", "--lambda", "9"])), 2);
}

#[test]
fn group_reports() {
    let g = data("psl2_7.grp");
    assert_eq!(stdout(&run(&["group", "order", path_str(&g)])), "168\n");
    assert_eq!(stdout(&run(&["group", "orbits", path_str(&g)])), "{1,2,3,4,5,6,7}\n");
    assert_eq!(stdout(&run(&["group", "primitive", path_str(&g)])), "primitive: yes\n");
    assert_eq!(stdout(&run(&["group", "subdegrees", path_str(&g), "--point", "3"])), "1 6\n");
    let u = data("psu4_2_45.grp");
    assert_eq!(stdout(&run(&["group", "subdegrees", path_str(&u)])), "1 12 32\n");
}

#[test]
fn table_run_streams_rows_in_order_and_is_deterministic() {
    let a = run(&["eliminate", "--table", "T6", "--jobs", "3"]);
    let b = run(&["eliminate", "--table", "T6"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let ids: Vec<String> = stdout(&a)
        .lines()
        .filter(|l| l.starts_with("#R "))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(ids.len(), 10);
    assert!(stdout(&a).lines().filter(|l| l.starts_with("#R ")).all(|l| l.contains(" PASS EMPTY")));
    let p = run(&["eliminate", "--table", "P4.2"]);
    assert!(stdout(&p).contains("#R P4.2 PASS (446,223) ; arithmetic-consistent"));
}

#[test]
fn construct_pg_and_diffset() {
    let o = run(&["construct", "pg", "3", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("v 7\n"));
    let dir = tempfile::tempdir().unwrap();
    let (f, g) = (dir.path().join("d.des"), dir.path().join("d.grp"));
    let o = run(&[
        "construct", "diffset", "--ambient", "cyclic:11", "--set", "1", "3", "4", "5", "9", "-o", path_str(&f),
        "--group-out", path_str(&g),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&run(&["verify", path_str(&f)])), "(11,5,2)\n");
    assert_eq!(stdout(&run(&["group", "order", path_str(&g)])), "11\n");
    let o = run(&["construct", "diffset", "--ambient", "q8xz2", "--k", "6", "--lambda", "2"]);
    assert_eq!(code(&o), 0);
    let o = run(&["construct", "diffset", "--ambient", "cyclic:10", "--k", "5", "--lambda", "2"]);
    assert_eq!(code(&o), 1);
    let o = run(&["construct", "diffset", "--ambient", "cyclic:11", "--set", "0", "1", "2", "3", "5"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a difference set"));
}

#[test]
fn families_for_lambda_seven() {
    let o = run(&["families", "--lambda", "7"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("(v,k,λ)=(247,42,7) (c,d,l)=(13,19,3)"));
}
