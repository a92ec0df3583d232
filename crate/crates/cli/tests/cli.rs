use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clawsquare"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generates_the_blow_up() {
    let o = run(&["gen", "c5_blowup", "4"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let edges: usize = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(2).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(edges, 20);
}

#[test]
fn main_method_on_the_wheel() {
    let o = run(&["color", "--method", "main", "--eps", "1/36", "wheel5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# step depth=0 n=6 omega=3 case=c v=0"));
    assert!(text.contains("colors 6 method main_procedure"));
}

#[test]
fn exhaustive_small_multigraphs_pass() {
    let o = run(&["verify", "cgtt", "--exhaustive", "n=6", "dmax=4", "mmax=3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("instance-id,check-name,pass/fail,lhs,rhs,margin"));
    assert!(!text.contains(",fail,"));
}

#[test]
fn outputs_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for path in [&a, &b] {
        let o = run(&[
            "--seed",
            "11",
            "gen",
            "random_regular",
            "12",
            "5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let first = run(&["verify", "identity", a.to_str().unwrap()]);
    assert_eq!(first.status.code(), Some(0));
    let copy = dir.path().join("copy.txt");
    fs::write(&copy, fs::read(&a).unwrap()).unwrap();
    let second = run(&["verify", "identity", copy.to_str().unwrap()]);
    assert_eq!(first.stdout, second.stdout);

    let sparsity = run(&["verify", "sparsity", a.to_str().unwrap()]);
    assert_eq!(sparsity.status.code(), Some(0));
}

#[test]
fn interval_and_scheme_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let rep = dir.path().join("rep.txt");
    assert!(run(&[
        "--seed",
        "3",
        "gen",
        "circular",
        "12",
        "20",
        "5",
        "--out",
        rep.to_str().unwrap()
    ])
    .status
    .success());
    assert_eq!(
        run(&["verify", "interval", rep.to_str().unwrap()]).status.code(),
        Some(0)
    );
    assert_eq!(
        run(&["color", "--method", "greedy", rep.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );

    let scheme = dir.path().join("scheme.txt");
    assert!(run(&[
        "--seed",
        "3",
        "gen",
        "scheme",
        "4",
        "5",
        "--out",
        scheme.to_str().unwrap()
    ])
    .status
    .success());
    let o = run(&["recognize", scheme.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("claw none"));
}

#[test]
fn multigraph_inputs_need_the_line_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    fs::write(&f, "2 1\n0 1 3\n").unwrap();
    assert_eq!(run(&["square", f.to_str().unwrap()]).status.code(), Some(2));
    let o = run(&["square", "--line", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), "3 3\n0 1\n0 2\n1 2\n");
    let o = run(&["color", "--method", "strong-exact", f.to_str().unwrap()]);
    assert!(stdout(&o).contains("colors 3 method exact"));
}

#[test]
fn exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 1\n0 7\n").unwrap();
    assert_eq!(run(&["square", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["color", "--eps", "one-half", "wheel5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "config", "--eps2", "2"]).status.code(), Some(1));
    // A path is not regular, so the identity has no formula value.
    let path = dir.path().join("path.txt");
    fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    assert_eq!(
        run(&["verify", "identity", path.to_str().unwrap()]).status.code(),
        Some(1)
    );
    // The quasi-line selector refuses line graphs.
    assert_eq!(run(&["select", "diamond"]).status.code(), Some(1));
}
