//! End-to-end tests of the `tsw` binary: exit codes, output shapes, stdin
//! handling, and gen | verify pipelines.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_tsw");

const REVERSED_PATH3: &str = "tsw v1 ts\nn 3 m 2\ne 0 1\ne 1 2\nt 0 2\nt 1 1\nt 2 0\n";

fn run_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn solve_bfs_prints_solution_and_stats() {
    let out = run_stdin(&["solve", "--algo", "bfs", "-"], REVERSED_PATH3);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("sol 3\n"), "unexpected output:\n{text}");
    assert!(
        text.contains("stats length=3 states=") && text.contains("class_counts=(-1,-1):"),
        "missing stats line:\n{text}"
    );
}

#[test]
fn solve_bounded_below_optimum_is_no() {
    let out = run_stdin(&["solve", "--algo", "bounded", "--k", "2", "-"], REVERSED_PATH3);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "no\n");
}

#[test]
fn solve_reach_exit_codes() {
    let yes = run_stdin(&["solve", "--algo", "reach", "--k", "3", "-"], REVERSED_PATH3);
    assert_eq!((code(&yes), stdout(&yes)), (0, "yes\n".into()));
    let no = run_stdin(&["solve", "--algo", "reach", "--k", "2", "-"], REVERSED_PATH3);
    assert_eq!((code(&no), stdout(&no)), (1, "no\n".into()));
}

#[test]
fn solve_special_on_path() {
    let out = run_stdin(&["solve", "--algo", "special", "-"], REVERSED_PATH3);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("stats length=3 "));
}

#[test]
fn solve_special_rejects_unsupported_shape() {
    // a 4-cycle is neither path, star, nor clique
    let cycle = "tsw v1 ts\nn 4 m 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\nt 0 1\nt 1 0\nt 2 2\nt 3 3\n";
    let out = run_stdin(&["solve", "--algo", "special", "-"], cycle);
    assert_eq!(code(&out), 2);
}

#[test]
fn solve_state_cap_exits_3() {
    let out = run_stdin(
        &["solve", "--algo", "bfs", "--max-states", "2", "-"],
        REVERSED_PATH3,
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_valid_and_invalid() {
    let good = format!("{REVERSED_PATH3}sol 3\ns 0 1\ns 1 2\ns 0 1\n");
    let out = run_stdin(&["verify", "-"], &good);
    assert_eq!((code(&out), stdout(&out)), (0, "valid length=3\n".into()));

    let bad = format!("{REVERSED_PATH3}sol 1\ns 0 1\n");
    let out = run_stdin(&["verify", "-"], &bad);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("invalid"));
}

#[test]
fn verify_enforces_budget_trailer() {
    let text = "tsw v1 ts\nn 3 m 2\ne 0 1\ne 1 2\nt 0 2\nt 1 1\nt 2 0\nbudget 2\nsol 3\ns 0 1\ns 1 2\ns 0 1\n";
    let out = run_stdin(&["verify", "-"], text);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("exceeds budget=2"));
}

#[test]
fn verify_two_file_form() {
    let dir = std::env::temp_dir().join("tsw-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let inst = dir.join("inst.tsw");
    let sol = dir.join("sol.tsw");
    std::fs::write(&inst, REVERSED_PATH3).unwrap();
    std::fs::write(&sol, "sol 3\ns 0 1\ns 1 2\ns 0 1\n").unwrap();
    let out = Command::new(BIN)
        .args(["verify", inst.to_str().unwrap(), sol.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!((code(&out), stdout(&out)), (0, "valid length=3\n".into()));
}

#[test]
fn feasible_prints_assignment() {
    let sts = "tsw v1 sts\nn 2 m 1\ne 0 1\nd 0 1 1\nd 1 1 0\n";
    let out = run_stdin(&["feasible", "-"], sts);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "feasible\na 0 1\na 1 0\n");

    let bad = "tsw v1 sts\nn 2 m 1\ne 0 1\nd 0 1 0\nd 1 1 0\n";
    let out = run_stdin(&["feasible", "-"], bad);
    assert_eq!((code(&out), stdout(&out)), (1, "infeasible\n".into()));
}

#[test]
fn kernelize_emits_map_and_instance() {
    let mut text = String::from("tsw v1 ts\nn 10 m 9\n");
    for i in 0..9 {
        text.push_str(&format!("e {i} {}\n", i + 1));
    }
    for t in 0..10 {
        let d = match t {
            4 => 5,
            5 => 4,
            t => t,
        };
        text.push_str(&format!("t {t} {d}\n"));
    }
    let out = run_stdin(&["kernelize", "--k", "1", "-"], &text);
    assert_eq!(code(&out), 0);
    let printed = stdout(&out);
    assert!(printed.starts_with("# map 0 3\n# map 1 4\n# map 2 5\n# map 3 6\n"));
    assert!(printed.contains("tsw v1 ts\nn 4 m 3\n"));

    // 4 misplaced tokens with k = 1 is a definitive no
    let no = run_stdin(
        &["kernelize", "--k", "1", "-"],
        "tsw v1 ts\nn 4 m 3\ne 0 1\ne 1 2\ne 2 3\nt 0 1\nt 1 0\nt 2 3\nt 3 2\n",
    );
    assert_eq!(code(&no), 1);
}

#[test]
fn bound_lower_and_upper() {
    let out = run_stdin(&["bound", "-"], REVERSED_PATH3);
    assert_eq!((code(&out), stdout(&out)), (0, "lower=2\n".into()));
    let out = run_stdin(&["bound", "--r", "3", "-"], REVERSED_PATH3);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("lower=2\nupper="));
}

#[test]
fn gen_linker_verifies_at_budget() {
    let gen = Command::new(BIN)
        .args(["gen", "linker", "--a", "3", "--b", "2"])
        .output()
        .unwrap();
    assert_eq!(code(&gen), 0);
    let out = run_stdin(&["verify", "-"], &stdout(&gen));
    assert_eq!((code(&out), stdout(&out)), (0, "valid length=15\n".into()));
}

#[test]
fn gen_star_sts_pipeline() {
    let dir = std::env::temp_dir().join("tsw-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let dg = dir.join("ham.dg");
    let cyc = dir.join("ham.cycle");
    // directed triangle 0 -> 1 -> 2 -> 0
    std::fs::write(&dg, "dg v1\nn 3 m 3\na 0 1\na 1 2\na 2 0\n").unwrap();
    std::fs::write(&cyc, "cycle v1\nv 0\nv 1\nv 2\n").unwrap();
    let gen = Command::new(BIN)
        .args([
            "gen",
            "star-sts",
            dg.to_str().unwrap(),
            "--certificate",
            cyc.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(code(&gen), 0);
    let out = run_stdin(&["verify", "-"], &stdout(&gen));
    assert_eq!((code(&out), stdout(&out)), (0, "valid length=4\n".into()));
}

#[test]
fn fo_emit_and_eval() {
    let emit = Command::new(BIN).args(["fo", "--k", "1"]).output().unwrap();
    assert_eq!(code(&emit), 0);
    assert!(stdout(&emit).contains("(edge s_1_1 s_1_2)"));

    let yes = run_stdin(&["fo", "--k", "3", "--eval", "-"], REVERSED_PATH3);
    assert_eq!((code(&yes), stdout(&yes)), (0, "yes\n".into()));
    let no = run_stdin(&["fo", "--k", "2", "--eval", "-"], REVERSED_PATH3);
    assert_eq!((code(&no), stdout(&no)), (1, "no\n".into()));
}

#[test]
fn usage_errors_exit_2() {
    let out = Command::new(BIN).args(["solve", "--algo", "bogus", "x"]).output().unwrap();
    assert_eq!(code(&out), 2);
    let out = run_stdin(&["solve", "--algo", "bounded", "-"], REVERSED_PATH3);
    assert_eq!(code(&out), 2, "missing --k must be a usage error");
    let out = run_stdin(&["verify", "-"], "tsw v1 ts\nnot a file\n");
    assert_eq!(code(&out), 2);
}
