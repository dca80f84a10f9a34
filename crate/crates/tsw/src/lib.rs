//! Token swapping toolkit: exact solvers, bounds, kernelization,
//! polynomial special cases, hardness-instance generators, and a
//! first-order encoding, for the plain (TS), colored (CTS), and subset
//! (STS) variants.
//!
//! Tokens live on the vertices of a simple connected graph and may be
//! exchanged along edges; token `t` starts on vertex `t` and must reach
//! one of its destination vertices. The universal certificate is a
//! [`instance::SwapSequence`].
//!
//! ```
//! use tsw::graph::Graph;
//! use tsw::instance::{Configuration, Instance};
//! use tsw::solver::{solve_bfs, SolveLimits};
//!
//! // swap two tokens across the middle edge of a 4-path
//! let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! let inst = Instance::new_ts(g, vec![0, 2, 1, 3]).unwrap();
//! let start = Configuration::identity(4);
//! let sol = solve_bfs(&inst, &start, None, &SolveLimits::default()).unwrap().unwrap();
//! assert_eq!(sol.length, 1);
//! assert!(inst.verify_solution(&start, &sol.swaps).valid);
//! ```
//!
//! Lower bounds come from half the total token-to-destination distance:
//!
//! ```
//! use tsw::bounds::lower_bound;
//! use tsw::graph::Graph;
//! use tsw::instance::{Configuration, Instance};
//!
//! let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
//! let inst = Instance::new_ts(g, vec![2, 1, 0]).unwrap();
//! // L = 4, so at least 2 swaps; the true optimum is 3
//! assert_eq!(lower_bound(&inst, &Configuration::identity(3)).unwrap(), 2);
//! ```
//!
//! Colored instances on stars and paths, and plain instances on cliques,
//! stars, and paths, are solved in polynomial time:
//!
//! ```
//! use tsw::colored::solve_star_cts;
//! use tsw::graph::Graph;
//! use tsw::instance::{Configuration, Instance};
//!
//! // center and one leaf have swapped colors
//! let star = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
//! let inst = Instance::new_cts(star, vec![0, 1, 2], vec![1, 0, 2]).unwrap();
//! let (seq, len) = solve_star_cts(&inst, &Configuration::identity(3)).unwrap();
//! assert_eq!(len, 1);
//! assert!(inst.verify_solution(&Configuration::identity(3), &seq).valid);
//! ```

pub mod bounds;
pub mod colored;
pub mod digraph;
pub mod error;
pub mod feasibility;
pub mod fo;
pub mod format;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod kernel;
pub mod perm;
pub mod solver;

pub use error::{Error, Result};
