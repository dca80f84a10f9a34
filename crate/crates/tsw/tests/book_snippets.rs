//! The runnable snippets from book/src that are not already crate
//! doc-tests, verbatim, so the guide cannot drift from the API.

use tsw::graph::Graph;
use tsw::instance::{Configuration, Instance};

// book/src/instances.md — building instances in code
#[test]
fn instances_constructors() {
    let path3 = || Graph::new(3, [(0, 1), (1, 2)]).unwrap();

    let ts = Instance::new_ts(path3(), vec![2, 1, 0]).unwrap();
    let cts = Instance::new_cts(path3(), vec![0, 1, 0], vec![0, 0, 1]).unwrap();
    let sts = Instance::new_sts(path3(), vec![vec![0, 2], vec![1], vec![0]]).unwrap();

    assert!(ts.is_ts());
    assert!(cts.colors().is_some());
    assert_eq!(sts.dests(0), &[0, 2]);
}

// book/src/instances.md — round-tripping
#[test]
fn instances_roundtrip() {
    use tsw::format::{parse_instance, serialize_instance};

    let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let inst = Instance::new_ts(g, vec![2, 1, 0]).unwrap();
    let parsed = parse_instance(&serialize_instance(&inst)).unwrap();
    assert_eq!(parsed.instance, inst);
}

// book/src/solving.md — breadth-first search
#[test]
fn solving_bfs_budget() {
    use tsw::solver::{solve_bfs, SolveLimits};

    let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let inst = Instance::new_ts(g, vec![2, 1, 0]).unwrap();
    let start = Configuration::identity(3);
    let limits = SolveLimits::default();

    let sol = solve_bfs(&inst, &start, None, &limits).unwrap().unwrap();
    assert_eq!(sol.length, 3);

    assert!(solve_bfs(&inst, &start, Some(2), &limits).unwrap().is_none());
}

// book/src/bounds.md — kernelization
#[test]
fn bounds_kernel() {
    use tsw::kernel::{kernelize, KernelResult};

    let g = Graph::new(10, (0..9).map(|i| (i, i + 1))).unwrap();
    let mut dest: Vec<usize> = (0..10).collect();
    dest.swap(4, 5);
    let inst = Instance::new_ts(g, dest).unwrap();

    let KernelResult::Kernel(k) = kernelize(&inst, 1).unwrap() else { panic!() };
    assert_eq!(k.vertex_map, vec![3, 4, 5, 6]);
}

// book/src/fo.md — naive evaluation
#[test]
fn fo_eval() {
    use tsw::fo::eval_formula_naive;

    let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let inst = Instance::new_ts(g, vec![2, 1, 0]).unwrap();
    assert!(!eval_formula_naive(&inst, 2).unwrap());
    assert!(eval_formula_naive(&inst, 3).unwrap());
}
