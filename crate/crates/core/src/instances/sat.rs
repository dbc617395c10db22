//! 3-SAT (each variable twice positive, twice negative) to r-rainbow paths
//! with `r = 2`.
//!
//! Variable `x_i` becomes two parallel branches `v_i -> v^1 -> v^2 -> y_i`
//! and `v_i -> v̄^1 -> v̄^2 -> y_i`, followed by `y_i -> mid_i -> v'_i`.
//! Clause `j` is a choice of three literal paths from `w_j` to `w_{j+1}`,
//! each running through the branch vertex reserved for that occurrence.
//! A path can use a branch vertex only once, so the branch skipped in the
//! variable part encodes the truth value.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{GeneratorError, ParseError};
use crate::graph::{ColoredDigraph, Query, Vertex};

/// Clauses of three literals; literal `+i` / `-i` is `x_i` / `¬x_i`,
/// variables are `1..=num_vars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Self {
        Cnf { num_vars, clauses }
    }

    /// `assignment[i]` is the value of `x_{i+1}`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&lit| {
                let val = assignment[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    val
                } else {
                    !val
                }
            })
        })
    }

    /// `(positive, negative)` occurrence counts per variable.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(0, 0); self.num_vars];
        for c in &self.clauses {
            for &lit in c {
                let e = &mut occ[lit.unsigned_abs() as usize - 1];
                if lit > 0 {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        occ
    }

    fn check_literals(&self) -> Result<(), GeneratorError> {
        for c in &self.clauses {
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > self.num_vars {
                    return Err(GeneratorError::Invalid(format!(
                        "literal {lit} outside variables 1..={}",
                        self.num_vars
                    )));
                }
            }
        }
        Ok(())
    }

    /// Every variable occurs exactly twice positive and twice negative.
    pub fn validate_compliant(&self) -> Result<(), GeneratorError> {
        self.check_literals()?;
        for (i, &(positive, negative)) in self.occurrences().iter().enumerate() {
            if positive != 2 || negative != 2 {
                return Err(GeneratorError::Occurrences {
                    var: i + 1,
                    positive,
                    negative,
                });
            }
        }
        Ok(())
    }

    /// Reads the `p cnf` header and zero-terminated clauses of three
    /// literals; `c` lines are comments.
    pub fn parse_dimacs(text: &str) -> Result<Cnf, ParseError> {
        let mut num_vars = None;
        let mut declared = 0usize;
        let mut pending: Vec<i32> = Vec::new();
        let mut pending_line = 0;
        let mut clauses = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if line.starts_with('p') {
                let parts: Vec<&str> = line.split_whitespace().collect();
                if parts.len() != 4 || parts[1] != "cnf" {
                    return Err(ParseError::new(
                        line_no,
                        "expected 'p cnf <vars> <clauses>'",
                    ));
                }
                let nv = parts[2]
                    .parse()
                    .map_err(|_| ParseError::new(line_no, "bad variable count"))?;
                declared = parts[3]
                    .parse()
                    .map_err(|_| ParseError::new(line_no, "bad clause count"))?;
                num_vars = Some(nv);
                continue;
            }
            let nv = num_vars.ok_or_else(|| ParseError::new(line_no, "clause before header"))?;
            for tok in line.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| ParseError::new(line_no, format!("bad literal '{tok}'")))?;
                if pending.is_empty() {
                    pending_line = line_no;
                }
                if lit == 0 {
                    let clause: [i32; 3] = pending.as_slice().try_into().map_err(|_| {
                        ParseError::new(
                            pending_line,
                            format!("clause has {} literals, expected 3", pending.len()),
                        )
                    })?;
                    clauses.push(clause);
                    pending.clear();
                } else {
                    if lit.unsigned_abs() as usize > nv {
                        return Err(ParseError::new(
                            line_no,
                            format!("literal {lit} out of range"),
                        ));
                    }
                    pending.push(lit);
                }
            }
        }
        let num_vars = num_vars.ok_or_else(|| ParseError::new(1, "missing 'p cnf' header"))?;
        if !pending.is_empty() {
            return Err(ParseError::new(pending_line, "unterminated clause"));
        }
        if clauses.len() != declared {
            log::warn!(
                "header declares {declared} clauses, found {}",
                clauses.len()
            );
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            let _ = writeln!(out, "{} {} {} 0", c[0], c[1], c[2]);
        }
        out
    }
}

/// Vertex ids of a generated instance (variables and clauses 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatLayout {
    pub num_vars: usize,
    pub num_clauses: usize,
}

impl SatLayout {
    pub fn vertex_count(&self) -> usize {
        8 * self.num_vars + 2 + (self.num_clauses + 1) + 3 * self.num_clauses
    }

    fn var(&self, i: usize, slot: usize) -> Vertex {
        8 * (i - 1) + slot
    }

    pub fn v(&self, i: usize) -> Vertex {
        self.var(i, 0)
    }

    /// Branch vertex `v^sup` (positive) or `v̄^sup` (negative).
    pub fn branch(&self, i: usize, positive: bool, sup: usize) -> Vertex {
        self.var(i, if positive { 0 } else { 2 } + sup)
    }

    pub fn y(&self, i: usize) -> Vertex {
        self.var(i, 5)
    }

    pub fn mid(&self, i: usize) -> Vertex {
        self.var(i, 6)
    }

    pub fn v_prime(&self, i: usize) -> Vertex {
        self.var(i, 7)
    }

    /// The only color-4 vertex.
    pub fn link4(&self) -> Vertex {
        8 * self.num_vars
    }

    pub fn link2(&self) -> Vertex {
        8 * self.num_vars + 1
    }

    /// `w_j` for `j` in `1..=num_clauses + 1`.
    pub fn w(&self, j: usize) -> Vertex {
        8 * self.num_vars + 2 + (j - 1)
    }

    /// Private vertex of the `slot`-th literal path of clause `j`.
    pub fn fresh(&self, j: usize, slot: usize) -> Vertex {
        8 * self.num_vars + 2 + (self.num_clauses + 1) + 3 * (j - 1) + slot
    }
}

/// Builds the instance with `r = 2`, `ell = 6n + 3m + 2`, `s = v_1` and
/// `t = w_{m+1}`. The first occurrence of a literal (in clause order) uses
/// branch vertex 1, the second branch vertex 2.
pub fn gen_3sat_instance(cnf: &Cnf) -> Result<(ColoredDigraph, Query), GeneratorError> {
    cnf.validate_compliant()?;
    if cnf.num_vars == 0 {
        return Err(GeneratorError::Invalid("formula has no variables".into()));
    }
    let n_vars = cnf.num_vars;
    let m = cnf.clauses.len();
    let lay = SatLayout {
        num_vars: n_vars,
        num_clauses: m,
    };
    let mut colors = vec![0u64; lay.vertex_count()];
    let mut arcs = Vec::new();
    for i in 1..=n_vars {
        colors[lay.v(i)] = 1;
        colors[lay.y(i)] = 1;
        colors[lay.mid(i)] = 2;
        colors[lay.v_prime(i)] = 3;
        for positive in [true, false] {
            let (b1, b2) = (lay.branch(i, positive, 1), lay.branch(i, positive, 2));
            colors[b1] = 2;
            colors[b2] = 3;
            arcs.extend([(lay.v(i), b1), (b1, b2), (b2, lay.y(i))]);
        }
        arcs.extend([(lay.y(i), lay.mid(i)), (lay.mid(i), lay.v_prime(i))]);
        if i < n_vars {
            arcs.push((lay.v_prime(i), lay.v(i + 1)));
        }
    }
    colors[lay.link4()] = 4;
    colors[lay.link2()] = 2;
    arcs.extend([
        (lay.v_prime(n_vars), lay.link4()),
        (lay.link4(), lay.link2()),
        (lay.link2(), lay.w(1)),
    ]);
    let mut used = vec![[0usize; 2]; n_vars + 1];
    for (jj, clause) in cnf.clauses.iter().enumerate() {
        let j = jj + 1;
        colors[lay.w(j)] = 1;
        for (slot, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize;
            let positive = lit > 0;
            let count = &mut used[var][usize::from(!positive)];
            *count += 1;
            let attached = lay.branch(var, positive, *count);
            let f = lay.fresh(j, slot);
            if *count == 1 {
                colors[f] = 3;
                arcs.extend([(lay.w(j), f), (f, attached), (attached, lay.w(j + 1))]);
            } else {
                colors[f] = 2;
                arcs.extend([(lay.w(j), attached), (attached, f), (f, lay.w(j + 1))]);
            }
        }
    }
    colors[lay.w(m + 1)] = 1;
    let g = ColoredDigraph::new(lay.vertex_count(), arcs, colors, lay.v(1), lay.w(m + 1))?;
    Ok((g, Query::at_most(2, 6 * n_vars + 3 * m + 2)))
}

/// A random compliant formula over `num_vars` variables (a positive
/// multiple of 3) without repeated variables inside a clause.
pub fn random_compliant_cnf(num_vars: usize, rng: &mut impl Rng) -> Result<Cnf, GeneratorError> {
    if num_vars == 0 || !num_vars.is_multiple_of(3) {
        return Err(GeneratorError::Invalid(format!(
            "{num_vars} variables cannot be compliant: 4n literals must split into clauses of 3"
        )));
    }
    let mut literals: Vec<i32> = (1..=num_vars as i32).flat_map(|v| [v, v, -v, -v]).collect();
    for _ in 0..10_000 {
        literals.shuffle(rng);
        let clauses: Vec<[i32; 3]> = literals.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
        let distinct = clauses.iter().all(|c| {
            let (a, b, d) = (c[0].abs(), c[1].abs(), c[2].abs());
            a != b && b != d && a != d
        });
        if distinct {
            return Ok(Cnf::new(num_vars, clauses));
        }
    }
    Err(GeneratorError::Invalid(
        "could not draw a formula without repeated variables".into(),
    ))
}
