use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tsw::error::Error;
use tsw::format::{self, ParsedInstance};
use tsw::instance::{ClassCounts, Configuration, Instance, SwapSequence};
use tsw::solver::SolveLimits;
use tsw::{bounds, colored, feasibility, fo, gen, kernel, solver};

/// Token swapping toolkit: solve, verify, bound, kernelize, generate.
///
/// Exit codes: 0 = success / yes / valid, 1 = no / invalid, 2 = usage or
/// input error, 3 = resource cap exceeded. `-` means standard input.
#[derive(Parser)]
#[command(name = "tsw", version, about, max_term_width = 80)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the solution plus a stats line.
    Solve {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Swap budget (required for bounded and reach).
        #[arg(long)]
        k: Option<usize>,
        /// Explored-state cap for bfs.
        #[arg(long)]
        max_states: Option<usize>,
        /// Node-expansion cap for ida.
        #[arg(long)]
        max_nodes: Option<u64>,
        instance: String,
    },
    /// Verify a solution; with one argument, read a combined
    /// instance-plus-solution stream.
    Verify { instance: String, solution: Option<String> },
    /// Check destination feasibility and print one matching.
    Feasible { instance: String },
    /// Trim an instance to the radius-k ball around misplaced tokens.
    Kernelize {
        #[arg(long)]
        k: usize,
        instance: String,
    },
    /// Print the half-distance lower bound (and an upper bound with --r).
    Bound {
        /// The graph has no induced path on r + 1 vertices.
        #[arg(long)]
        r: Option<u64>,
        instance: String,
    },
    /// Generate a hardness-reduction instance with a budget line and, when
    /// a source solution is supplied, a budget-exact certificate.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Emit the first-order formula for budget k, or evaluate it naively.
    Fo {
        #[arg(long)]
        k: usize,
        /// Instance to evaluate instead of printing the formula.
        #[arg(long)]
        eval: Option<String>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Algo {
    Bfs,
    Bounded,
    Reach,
    Ida,
    /// Auto-detect star/clique/path shape and variant.
    Special,
}

#[derive(Subcommand)]
enum GenKind {
    /// A single closed linker gadget L_{a,b}; budget a(a+2).
    Linker {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Multicolored subgraph isomorphism (msi v1) to plain swapping.
    W1 {
        msi: String,
        /// MSI solution (phi v1) to derive the certificate from.
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Exact cover by 3-sets (x3c v1) to swapping on a tree plus apex.
    AlmostTree {
        x3c: String,
        /// Exact cover (cover v1).
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Directed Hamiltonian cycle (dg v1) to subset swapping on a star.
    StarSts {
        digraph: String,
        /// Hamiltonian cycle (cycle v1).
        #[arg(long)]
        certificate: Option<String>,
    },
    /// Directed triangle decomposition (dg v1) to colored swapping on a
    /// clique.
    CliqueCts {
        digraph: String,
        /// Triangle decomposition (tri v1).
        #[arg(long)]
        certificate: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::StateBudgetExceeded(_)
                | Error::NodeBudgetExceeded(_)
                | Error::EnumCapExceeded { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn load_instance(path: &str) -> Result<ParsedInstance, Error> {
    format::parse_instance(&read_input(path)?)
}

fn usage(msg: &str) -> Error {
    Error::InvalidParameter(msg.into())
}

fn class_counts_field(counts: &ClassCounts) -> String {
    counts
        .iter()
        .map(|((x, y), c)| format!("({x},{y}):{c}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn print_solution(inst: &Instance, start: &Configuration, seq: &SwapSequence, states: u64) {
    let report = inst.verify_solution(start, seq);
    debug_assert!(report.valid);
    print!("{}", format::serialize_solution(seq));
    println!(
        "stats length={} states={} class_counts={}",
        report.length,
        states,
        class_counts_field(&report.class_counts)
    );
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Solve { algo, k, max_states, max_nodes, instance } => {
            let parsed = load_instance(&instance)?;
            let inst = parsed.instance;
            let start = Configuration::identity(inst.n());
            let mut limits = SolveLimits::default();
            if let Some(s) = max_states {
                limits.max_states = s;
            }
            if let Some(n) = max_nodes {
                limits.max_nodes = n;
            }
            match algo {
                Algo::Bfs => match solver::solve_bfs(&inst, &start, k, &limits)? {
                    Some(sol) => {
                        print_solution(&inst, &start, &sol.swaps, sol.states as u64);
                        Ok(0)
                    }
                    None => {
                        println!("no");
                        Ok(1)
                    }
                },
                Algo::Bounded => {
                    let k = k.ok_or_else(|| usage("--algo bounded requires --k"))?;
                    match solver::solve_bounded(&inst, &start, k)? {
                        Some(seq) => {
                            print_solution(&inst, &start, &seq, 0);
                            Ok(0)
                        }
                        None => {
                            println!("no");
                            Ok(1)
                        }
                    }
                }
                Algo::Reach => {
                    let k = k.ok_or_else(|| usage("--algo reach requires --k"))?;
                    if solver::solve_via_reach(&inst, &start, k, &limits)? {
                        println!("yes");
                        Ok(0)
                    } else {
                        println!("no");
                        Ok(1)
                    }
                }
                Algo::Ida => match solver::solve_ida(&inst, &start, &limits)? {
                    Some(sol) => {
                        print_solution(&inst, &start, &sol.swaps, sol.states as u64);
                        Ok(0)
                    }
                    None => {
                        println!("no");
                        Ok(1)
                    }
                },
                Algo::Special => {
                    let (seq, _) = solve_special(&inst, &start)?;
                    print_solution(&inst, &start, &seq, 0);
                    Ok(0)
                }
            }
        }

        Command::Verify { instance, solution } => {
            let (parsed, seq) = match solution {
                Some(sol_path) => {
                    let parsed = load_instance(&instance)?;
                    let seq = format::parse_solution(&read_input(&sol_path)?)?;
                    (parsed, seq)
                }
                None => {
                    let stream = format::parse_stream(&read_input(&instance)?)?;
                    let seq = stream.solution.ok_or_else(|| {
                        usage("combined stream has no solution; pass a solution file")
                    })?;
                    (stream.instance, seq)
                }
            };
            let inst = parsed.instance;
            let start = Configuration::identity(inst.n());
            let report = inst.verify_solution(&start, &seq);
            if !report.valid {
                println!("invalid {:?}", report.failure.unwrap());
                return Ok(1);
            }
            if let Some(budget) = parsed.budget {
                if report.length as u64 > budget {
                    println!("invalid length={} exceeds budget={budget}", report.length);
                    return Ok(1);
                }
            }
            println!("valid length={}", report.length);
            Ok(0)
        }

        Command::Feasible { instance } => {
            let inst = load_instance(&instance)?.instance;
            let result = feasibility::check_feasible(&inst);
            match result.assignment {
                Some(assignment) => {
                    println!("feasible");
                    for (t, v) in assignment.iter().enumerate() {
                        println!("a {t} {v}");
                    }
                    Ok(0)
                }
                None => {
                    println!("infeasible");
                    Ok(1)
                }
            }
        }

        Command::Kernelize { k, instance } => {
            let inst = load_instance(&instance)?.instance;
            match kernel::kernelize(&inst, k)? {
                kernel::KernelResult::No => {
                    println!("no");
                    Ok(1)
                }
                kernel::KernelResult::Kernel(kernel) => {
                    for (new, old) in kernel.vertex_map.iter().enumerate() {
                        println!("# map {new} {old}");
                    }
                    print!("{}", format::serialize_instance(&kernel.instance));
                    Ok(0)
                }
            }
        }

        Command::Bound { r, instance } => {
            let inst = load_instance(&instance)?.instance;
            let start = Configuration::identity(inst.n());
            match bounds::lower_bound(&inst, &start) {
                Ok(lower) => {
                    println!("lower={lower}");
                    if let Some(r) = r {
                        println!("upper={}", bounds::upper_bound_pr_free(&inst, r)?);
                    }
                    Ok(0)
                }
                Err(Error::Infeasible) => {
                    println!("infeasible");
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }

        Command::Gen { kind } => {
            let generated = match kind {
                GenKind::Linker { a, b } => gen_linker_instance(a, b)?,
                GenKind::W1 { msi, certificate } => {
                    let msi = gen::parse_msi(&read_input(&msi)?)?;
                    let phi = certificate
                        .map(|p| gen::parse_phi(&read_input(&p)?, msi.k))
                        .transpose()?;
                    gen::gen_w1_instance(&msi, phi.as_deref())?
                }
                GenKind::AlmostTree { x3c, certificate } => {
                    let x3c = gen::parse_x3c(&read_input(&x3c)?)?;
                    let cover =
                        certificate.map(|p| gen::parse_cover(&read_input(&p)?)).transpose()?;
                    gen::gen_almost_tree(&x3c, cover.as_deref())?
                }
                GenKind::StarSts { digraph, certificate } => {
                    let h = tsw::digraph::parse_digraph(&read_input(&digraph)?)?;
                    let cycle =
                        certificate.map(|p| gen::parse_cycle(&read_input(&p)?)).transpose()?;
                    gen::gen_star_sts(&h, cycle.as_deref())?
                }
                GenKind::CliqueCts { digraph, certificate } => {
                    let h = tsw::digraph::parse_digraph(&read_input(&digraph)?)?;
                    let tris =
                        certificate.map(|p| gen::parse_triangles(&read_input(&p)?)).transpose()?;
                    gen::gen_clique_cts(&h, tris.as_deref())?
                }
            };
            print!("{}", format::serialize_instance(&generated.instance));
            println!("budget {}", generated.budget);
            if let Some(cert) = &generated.certificate {
                print!("{}", format::serialize_solution(cert));
            }
            Ok(0)
        }

        Command::Fo { k, eval } => match eval {
            None => {
                print!("{}", fo::emit_formula(k)?);
                Ok(0)
            }
            Some(path) => {
                let inst = load_instance(&path)?.instance;
                if fo::eval_formula_naive(&inst, k)? {
                    println!("yes");
                    Ok(0)
                } else {
                    println!("no");
                    Ok(1)
                }
            }
        },
    }
}

/// Dispatch to a polynomial special-case solver by graph shape and
/// variant.
fn solve_special(inst: &Instance, start: &Configuration) -> Result<(SwapSequence, usize), Error> {
    let g = inst.graph();
    if inst.colors().is_some() {
        if g.is_star_centered() {
            return colored::solve_star_cts(inst, start);
        }
        if g.is_path_in_order() {
            return colored::solve_path_cts(inst, start);
        }
    } else if inst.is_ts() {
        if g.is_clique() {
            return colored::solve_clique_ts(inst, start);
        }
        if g.is_star_centered() {
            return colored::solve_star_ts(inst, start);
        }
        if g.is_path_in_order() {
            return colored::solve_path_ts(inst, start);
        }
    }
    Err(Error::UnsupportedShape(
        "no special algorithm for this shape/variant; use --algo bfs".into(),
    ))
}

/// A closed single-gadget linker instance: local tokens target the
/// starting path, starting-path tokens target the finishing set, private
/// tokens stay. Budget `a * (a + 2)`, met by routing everything through
/// the first private path.
fn gen_linker_instance(a: usize, b: usize) -> Result<gen::Generated, Error> {
    let frag = gen::gen_linker(a, b)?;
    let n = frag.graph.n();
    let mut dest: Vec<usize> = (0..n).collect();
    for p in 0..a {
        dest[frag.finishing[p]] = frag.starting[p];
        dest[frag.starting[p]] = frag.finishing[p];
    }
    let instance = Instance::new_ts(frag.graph.clone(), dest)?;

    let u = &frag.private_paths[0];
    let mut seq = SwapSequence::default();
    for p in (0..a).rev() {
        seq.push(frag.finishing[p], u[p]);
        for q in p..a - 1 {
            seq.push(u[q], u[q + 1]);
        }
        seq.push(u[a - 1], frag.starting[0]);
        for q in 0..p {
            seq.push(frag.starting[q], frag.starting[q + 1]);
        }
    }
    for p in 0..a {
        seq.push(u[p], frag.finishing[p]);
    }

    Ok(gen::Generated {
        instance,
        start: Configuration::identity(n),
        budget: (a * (a + 2)) as u64,
        certificate: Some(seq),
        provenance: gen::Provenance {
            source: "linker",
            params: vec![("a", a as u64), ("b", b as u64)],
        },
    })
}
