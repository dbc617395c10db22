//! Brute-force reference solvers. Slow on purpose and kept close to the
//! problem definitions so they can referee the DP solvers.

use std::collections::{HashMap, VecDeque};

use crate::colors::Color;
use crate::error::SolveError;
use crate::graph::{dist_to_target, ColoredDigraph, LengthMode, Query, Vertex, Witness};
use crate::instances::Cnf;

pub const DEFAULT_STATE_CEILING: u128 = 10_000_000;

/// A vertex together with the colors of the last `min(r, steps + 1)`
/// visited vertices, most recent last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductState {
    pub vertex: Vertex,
    pub window: Vec<Color>,
}

impl ProductState {
    fn step(&self, v: Vertex, c: Color, r: usize) -> Option<ProductState> {
        if self.window.contains(&c) {
            return None;
        }
        let mut window = self.window.clone();
        window.push(c);
        if window.len() > r {
            window.remove(0);
        }
        Some(ProductState { vertex: v, window })
    }
}

fn start_state(g: &ColoredDigraph, r: usize) -> ProductState {
    let window = if r == 0 {
        vec![]
    } else {
        vec![g.color(g.source())]
    };
    ProductState {
        vertex: g.source(),
        window,
    }
}

fn check_ceiling(g: &ColoredDigraph, r: usize, ceiling: u128) -> Result<(), SolveError> {
    let mut states: u128 = 1;
    for _ in 0..r {
        states = states.saturating_mul(g.color_count() as u128);
    }
    if states > ceiling {
        return Err(SolveError::StateCeiling { states, ceiling });
    }
    Ok(())
}

/// Exact walk decision by search over (vertex, window) states.
pub fn oracle_walk(g: &ColoredDigraph, q: Query) -> Result<Option<Witness>, SolveError> {
    oracle_walk_with_ceiling(g, q, DEFAULT_STATE_CEILING)
}

pub fn oracle_walk_with_ceiling(
    g: &ColoredDigraph,
    q: Query,
    ceiling: u128,
) -> Result<Option<Witness>, SolveError> {
    check_ceiling(g, q.r, ceiling)?;
    match q.mode {
        LengthMode::AtMost => Ok(shortest(g, q.r).filter(|w| w.len() <= q.ell)),
        LengthMode::AnyLength => Ok(shortest(g, q.r)),
        LengthMode::Exactly => Ok(exact(g, q.r, q.ell)),
    }
}

fn shortest(g: &ColoredDigraph, r: usize) -> Option<Witness> {
    let start = start_state(g, r);
    let mut parent: HashMap<ProductState, Option<ProductState>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        if state.vertex == g.target() {
            let mut path = vec![state.vertex];
            let mut cur = state;
            while let Some(Some(prev)) = parent.get(&cur) {
                path.push(prev.vertex);
                cur = prev.clone();
            }
            path.reverse();
            return Some(Witness::new(path));
        }
        for &v in g.out_neighbors(state.vertex) {
            if let Some(next) = state.step(v, g.color(v), r) {
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some(state.clone()));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

fn exact(g: &ColoredDigraph, r: usize, ell: usize) -> Option<Witness> {
    let mut layers: Vec<HashMap<ProductState, Option<ProductState>>> = Vec::with_capacity(ell + 1);
    layers.push(HashMap::from([(start_state(g, r), None)]));
    for _ in 0..ell {
        let mut next: HashMap<ProductState, Option<ProductState>> = HashMap::new();
        for state in layers.last().unwrap().keys() {
            for &v in g.out_neighbors(state.vertex) {
                if let Some(s) = state.step(v, g.color(v), r) {
                    next.entry(s).or_insert_with(|| Some(state.clone()));
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        layers.push(next);
    }
    let end = layers[ell].keys().find(|s| s.vertex == g.target())?.clone();
    let mut path = vec![end.vertex];
    let mut cur = end;
    for layer in layers.iter().rev() {
        match &layer[&cur] {
            Some(prev) => {
                path.push(prev.vertex);
                cur = prev.clone();
            }
            None => break,
        }
    }
    path.reverse();
    Some(Witness::new(path))
}

/// Exact path decision by depth-first enumeration of simple paths.
/// In any-length mode the budget is `n - 1`.
pub fn oracle_path(g: &ColoredDigraph, q: Query) -> Option<Witness> {
    let ell = match q.mode {
        LengthMode::AnyLength => g.vertex_count().saturating_sub(1),
        _ => q.ell,
    };
    let exact = q.mode == LengthMode::Exactly;
    let d = dist_to_target(g);
    let mut path = vec![g.source()];
    let mut on_path = vec![false; g.vertex_count()];
    on_path[g.source()] = true;
    dfs(g, q.r, ell, exact, &d, &mut path, &mut on_path).then(|| Witness::new(path))
}

fn dfs(
    g: &ColoredDigraph,
    r: usize,
    ell: usize,
    exact: bool,
    d: &[Option<usize>],
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
) -> bool {
    let u = *path.last().unwrap();
    let len = path.len() - 1;
    if u == g.target() {
        return !exact || len == ell;
    }
    for &v in g.out_neighbors(u) {
        if on_path[v] || d[v].is_none_or(|dv| len + 1 + dv > ell) {
            continue;
        }
        let c = g.color(v);
        let recent = &path[path.len().saturating_sub(r)..];
        if recent.iter().any(|&w| g.color(w) == c) {
            continue;
        }
        path.push(v);
        on_path[v] = true;
        if dfs(g, r, ell, exact, d, path, on_path) {
            return true;
        }
        path.pop();
        on_path[v] = false;
    }
    false
}

/// A permutation `phi` of `[1, k]` (as `phi[i - 1]`) such that every set
/// contains some `(i, phi(i))`. Permutations are tried in lexicographic
/// order, identity first.
pub fn oracle_phs(k: usize, sets: &[Vec<(usize, usize)>]) -> Option<Vec<usize>> {
    let mut phi: Vec<usize> = (1..=k).collect();
    loop {
        if sets
            .iter()
            .all(|f| f.iter().any(|&(i, j)| i >= 1 && i <= k && phi[i - 1] == j))
        {
            return Some(phi);
        }
        if !next_permutation(&mut phi) {
            return None;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// A satisfying assignment (`assignment[i]` for variable `i + 1`) by
/// enumeration, starting from all-true.
pub fn oracle_3sat(formula: &Cnf) -> Option<Vec<bool>> {
    let n = formula.num_vars;
    assert!(n <= 30, "enumeration over {n} variables is not supported");
    for mask in 0u64..(1u64 << n) {
        let assignment: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 0).collect();
        if formula.satisfied_by(&assignment) {
            return Some(assignment);
        }
    }
    None
}
