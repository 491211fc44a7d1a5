use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualrep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn check_projective() {
    let o = run(&["check", "--rep", &path("p1.rep")]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("perfect: yes\next1: 0\n"));
    assert!(out.contains("sgp: ok, |P| = 8, |M| = 4\n"));
    assert!(out.contains("H: 0\n"));
}

#[test]
fn check_simple_with_zero_eps() {
    let o = run(&["check", "--rep", &path("s1eps0.rep")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("perfect: no\next1: 1\n"), "{out}");
    assert!(out.contains("H: S(1)\n"));
    assert!(out.contains("root_type: real_root\n"));
}

#[test]
fn check_kronecker_member() {
    let o = run(&["check", "--rep", &path("kron_family.rep")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("perfect: no\n"));
    assert!(out.contains("H: S(2)\n"));
}

#[test]
fn parse_errors_exit_2_with_line() {
    let o = run(&["check", "--rep", &path("bad.rep")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 6"), "{}", stderr(&o));
    let o = run(&["check", "--rep", &path("bad_eps.rep")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 5"), "{}", stderr(&o));
    assert_eq!(run(&["ar", "--quiver", &path("cyclic.q")]).status.code(), Some(2));
    assert_eq!(run(&["check", "--rep", &path("missing.rep")]).status.code(), Some(2));
}

#[test]
fn eta_of_simple_on_a3() {
    let o = run(&["eta", "--rep", &path("s1.rep"), "--quiver", &path("a3.q"), "--verify-roundtrip"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("dim 1 = 1\ndim 2 = 2\ndim 3 = 2\n"), "{out}");
    assert!(stderr(&o).contains("roundtrip: ok"));
}

#[test]
fn eta_output_reparses_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eta.rep");
    let o = run(&["eta", "--rep", &path("s1.rep"), "--quiver", &path("a3.q"), "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["check", "--rep", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("perfect: yes\next1: 0\n") && text.contains("H: S(1)\n"), "{text}");
    let h = dir.path().join("h.rep");
    let o = run(&["homology", "--rep", out.to_str().unwrap(), "-o", h.to_str().unwrap(), "--verify-roundtrip"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["eta", "--rep", h.to_str().unwrap()]);
    assert_eq!(stdout(&o), std::fs::read_to_string(&out).unwrap());
}

#[test]
fn roundtrip_all_a3() {
    let o = run(&["eta", "--quiver", &path("a3.q"), "--verify-roundtrip"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "roundtrip: 6/6 ok\n");
}

#[test]
fn homology_of_projective_is_zero() {
    let o = run(&["homology", "--rep", &path("p1.rep"), "--verify-roundtrip"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("dim 1 = 0\ndim 2 = 0\n"));
}

#[test]
fn ar_counts_and_golden_dot() {
    let o = run(&["ar", "--mode", "kq", "--quiver", &path("a2.q")]);
    assert!(stdout(&o).contains("nodes: 3\n"));
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("out.dot");
    let o = run(&["ar", "--mode", "L", "--quiver", &path("a3.q"), "--dot", dot.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("nodes: 9\narrows: 14\nghost_arrows: 2\nprojective_nodes: 3\n"), "{out}");
    let golden = include_str!("../../core/tests/golden/gamma_l_a3.dot");
    assert_eq!(std::fs::read_to_string(&dot).unwrap(), golden);
    let o = run(&["ar", "--mode", "stable", "--quiver", &path("d4.q")]);
    assert!(stdout(&o).contains("nodes: 12\n"));
}

#[test]
fn ar_rejects_wild_quivers() {
    let o = run(&["ar", "--mode", "L", "--quiver", &path("kron.q")]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "--suite", "theorem2", "--quiver", &path("a3.q")]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("result: pass\n"));
    let o = run(&["verify", "--suite", "lemma21", "--quiver", &path("kron.q"), "--random", "200"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = run(&["verify", "--suite", "sgp", "--quiver", &path("a2.q")]);
    let out = stdout(&o);
    assert!(o.status.success());
    assert!(out.contains("row: ηS(1) 3 6 6\n"), "{out}");
    for s in ["theorem3", "kac"] {
        let o = run(&["verify", "--suite", s, "--quiver", &path("d4.q")]);
        assert!(o.status.success(), "{}", stdout(&o));
    }
    assert_eq!(run(&["verify", "--suite", "theorem3", "--quiver", &path("kron.q")]).status.code(), Some(4));
}

#[test]
fn deterministic_output() {
    let args = ["verify", "--suite", "lemma21", "--quiver", &path("a3.q"), "--random", "30", "--seed", "7"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}
