//! First-order encoding of bounded-length solutions, over the relations
//! `edge(x, y)` and `target(x, y)` (vertex `y` is an allowed destination
//! for the token starting on `x`; tokens are identified with their start
//! vertices).
//!
//! `Phi_k` encodes a solution of exactly `k` swaps by tracing the at most
//! `2k` involved tokens through `k` rounds of positions; `Phi_{<=k}` is
//! the disjunction over `0..=k`. Formulas are rendered as S-expressions.

use crate::error::{Error, Result};
use crate::instance::{Configuration, Instance};

/// First-order formula AST. Quantifiers bind lists of variables at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(Vec<String>, Box<Formula>),
    Forall(Vec<String>, Box<Formula>),
    Eq(String, String),
    Ne(String, String),
    Edge(String, String),
    Target(String, String),
}

impl Formula {
    /// Number of atomic subformulas (equalities, disequalities, and
    /// relation applications).
    pub fn atom_count(&self) -> usize {
        match self {
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(Formula::atom_count).sum(),
            Formula::Not(f) => f.atom_count(),
            Formula::Implies(a, b) => a.atom_count() + b.atom_count(),
            Formula::Exists(_, f) | Formula::Forall(_, f) => f.atom_count(),
            Formula::Eq(..) | Formula::Ne(..) | Formula::Edge(..) | Formula::Target(..) => 1,
        }
    }

    /// Render as an indented S-expression.
    pub fn to_sexpr(&self) -> String {
        let mut out = String::new();
        self.write(&mut out, 0);
        out
    }

    fn write(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        match self {
            Formula::Eq(a, b) => out.push_str(&format!("{pad}(= {a} {b})")),
            Formula::Ne(a, b) => out.push_str(&format!("{pad}(!= {a} {b})")),
            Formula::Edge(a, b) => out.push_str(&format!("{pad}(edge {a} {b})")),
            Formula::Target(a, b) => out.push_str(&format!("{pad}(target {a} {b})")),
            Formula::Not(f) => {
                out.push_str(&format!("{pad}(not\n"));
                f.write(out, indent + 1);
                out.push(')');
            }
            Formula::Implies(a, b) => {
                out.push_str(&format!("{pad}(->\n"));
                a.write(out, indent + 1);
                out.push('\n');
                b.write(out, indent + 1);
                out.push(')');
            }
            Formula::And(fs) | Formula::Or(fs) => {
                let tag = if matches!(self, Formula::And(_)) { "and" } else { "or" };
                out.push_str(&format!("{pad}({tag}\n"));
                for (i, f) in fs.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    f.write(out, indent + 1);
                }
                out.push(')');
            }
            Formula::Exists(vars, f) | Formula::Forall(vars, f) => {
                let tag = if matches!(self, Formula::Exists(..)) { "exists" } else { "forall" };
                out.push_str(&format!("{pad}({tag} ({})\n", vars.join(" ")));
                f.write(out, indent + 1);
                out.push(')');
            }
        }
    }
}

fn var(name: &str, idx: usize) -> String {
    format!("{name}_{idx}")
}

fn var2(name: &str, i: usize, j: usize) -> String {
    format!("{name}_{i}_{j}")
}

/// The already-solved disjunct: every token accepts its start vertex.
fn phi_zero() -> Formula {
    Formula::Forall(
        vec!["x".into()],
        Box::new(Formula::Target("x".into(), "x".into())),
    )
}

/// `Phi_k` for a fixed positive swap count, tracing `2k` tokens.
///
/// Position variables are indexed `pos_{j,0} .. pos_{j,k}` with `pos_{j,i}`
/// the position of traced token `j` after the `i`-th swap; the swap and
/// transition constraints therefore read the round before swap `i` as
/// `pos_{j,i-1}`.
pub fn phi_exact(k: usize) -> Result<Formula> {
    if k < 1 {
        return Err(Error::InvalidParameter("swap count must be at least 1".into()));
    }
    let m = 2 * k; // traced tokens
    let t = |j: usize| var("t", j);
    let dest = |j: usize| var("dest", j);
    let s = |i: usize, p: usize| var2("s", i, p);
    let st = |i: usize, p: usize| var2("st", i, p);
    let pos = |j: usize, i: usize| var2("pos", j, i);

    let mut vars: Vec<String> = (1..=m).map(t).collect();
    vars.extend((1..=m).map(dest));
    vars.extend((1..=k).flat_map(|i| [st(i, 1), st(i, 2)]));
    vars.extend((1..=k).flat_map(|i| [s(i, 1), s(i, 2)]));
    for i in 0..=k {
        vars.extend((1..=m).map(|j| pos(j, i)));
    }

    let mut body = Vec::new();
    // untouched tokens are already at feasible positions
    body.push(Formula::Forall(
        vec!["x".into()],
        Box::new(Formula::Implies(
            Box::new(Formula::And((1..=m).map(|j| Formula::Ne("x".into(), t(j))).collect())),
            Box::new(Formula::Target("x".into(), "x".into())),
        )),
    ));
    // traced tokens pairwise distinct
    for j in 1..=m {
        for j2 in j + 1..=m {
            body.push(Formula::Ne(t(j), t(j2)));
        }
    }
    // feasible final positions; swaps along edges
    body.extend((1..=m).map(|j| Formula::Target(t(j), dest(j))));
    body.extend((1..=k).map(|i| Formula::Edge(s(i, 1), s(i, 2))));
    // pos endpoints
    body.extend((1..=m).map(|j| Formula::Eq(pos(j, 0), t(j))));
    body.extend((1..=m).map(|j| Formula::Eq(pos(j, k), dest(j))));
    // swapped tokens are traced and sit on the swap edge
    for i in 1..=k {
        for p in 1..=2 {
            body.push(Formula::Or(
                (1..=m)
                    .map(|j| {
                        Formula::And(vec![
                            Formula::Eq(st(i, p), t(j)),
                            Formula::Eq(pos(j, i - 1), s(i, p)),
                        ])
                    })
                    .collect(),
            ));
        }
    }
    // uninvolved traced tokens keep their position
    for i in 1..=k {
        for j in 1..=m {
            body.push(Formula::Implies(
                Box::new(Formula::Not(Box::new(Formula::Or(vec![
                    Formula::Eq(st(i, 1), t(j)),
                    Formula::Eq(st(i, 2), t(j)),
                ])))),
                Box::new(Formula::Eq(pos(j, i), pos(j, i - 1))),
            ));
        }
    }
    // involved tokens exchange positions
    for i in 1..=k {
        for j in 1..=m {
            for j2 in 1..=m {
                if j == j2 {
                    continue;
                }
                body.push(Formula::Implies(
                    Box::new(Formula::And(vec![
                        Formula::Eq(st(i, 1), t(j)),
                        Formula::Eq(st(i, 2), t(j2)),
                    ])),
                    Box::new(Formula::And(vec![
                        Formula::Eq(pos(j, i), pos(j2, i - 1)),
                        Formula::Eq(pos(j2, i), pos(j, i - 1)),
                    ])),
                ));
            }
        }
    }

    Ok(Formula::Exists(vars, Box::new(Formula::And(body))))
}

/// `Phi_{<=k}`: the disjunction of `Phi_i` for `i = 0..=k` (the `i = 0`
/// disjunct covers already-solved instances, which the exact-count terms
/// cannot express).
pub fn formula_le_k(k: usize) -> Result<Formula> {
    if k < 1 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    let mut terms = vec![phi_zero()];
    for i in 1..=k {
        terms.push(phi_exact(i)?);
    }
    Ok(Formula::Or(terms))
}

/// Emit `Phi_{<=k}` as commented S-expression text.
pub fn emit_formula(k: usize) -> Result<String> {
    let formula = formula_le_k(k)?;
    let mut out = String::new();
    out.push_str(&format!("; Phi_<={k}: some solution uses at most {k} swaps\n"));
    out.push_str("; relations: (edge x y), (target x y); tokens are start vertices\n");
    out.push_str(
        "; pos_j_i is the position of traced token j after swap i; swap i reads\n\
         ; round i-1 and writes round i (indices 0..count within each disjunct)\n",
    );
    out.push_str("; the i=0 disjunct covers instances that are already solved\n");
    out.push_str(&formula.to_sexpr());
    out.push('\n');
    Ok(out)
}

/// Decide whether the instance (identity start) has a solution of length
/// at most `k`, by direct enumeration of the formula's witnesses: a traced
/// token set and a swap-edge sequence per exact count `i`. Traced sets have
/// `min(2i, n)` tokens, since `2i` pairwise-distinct tokens cannot exist on
/// fewer vertices. Hard caps: `n <= 5`, `k <= 3`.
pub fn eval_formula_naive(inst: &Instance, k: usize) -> Result<bool> {
    let n = inst.n();
    if n > 5 || k > 3 {
        return Err(Error::InvalidParameter(format!(
            "naive evaluation capped at n <= 5, k <= 3 (got n = {n}, k = {k})"
        )));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    for i in 0..=k {
        let traced = (2 * i).min(n);
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != traced {
                continue;
            }
            let in_set = |v: usize| mask >> v & 1 == 1;
            if (0..n).any(|x| !in_set(x) && !inst.accepts(x, x)) {
                continue;
            }
            if witness_exists(inst, mask, i, &mut Configuration::identity(n).placement().to_vec())
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Try every swap-edge sequence of length `rounds` touching only traced
/// tokens, checking final placement of the traced set.
fn witness_exists(inst: &Instance, mask: u32, rounds: usize, placement: &mut Vec<usize>) -> bool {
    if rounds == 0 {
        return (0..inst.n())
            .filter(|&v| mask >> placement[v] & 1 == 1)
            .all(|v| inst.accepts(placement[v], v));
    }
    for &(u, v) in inst.graph().edges() {
        if mask >> placement[u] & 1 == 0 || mask >> placement[v] & 1 == 0 {
            continue;
        }
        placement.swap(u, v);
        if witness_exists(inst, mask, rounds - 1, placement) {
            placement.swap(u, v);
            return true;
        }
        placement.swap(u, v);
    }
    false
}
