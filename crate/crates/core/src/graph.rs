//! Vertex-colored digraphs with two terminals, queries and witnesses.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colors::{Color, ColorSeq};
use crate::error::GraphError;

pub type Vertex = usize;

/// A vertex-colored digraph without self-loops and with terminals `s != t`.
///
/// Colors are stored densely in `[0, |C|)`; the original labels are kept so
/// the instance can be written back unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDigraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    colors: Vec<Color>,
    labels: Vec<u64>,
    s: Vertex,
    t: Vertex,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

impl ColoredDigraph {
    /// Builds a graph from arbitrary non-negative color labels, which are
    /// remapped to dense ids in increasing label order. Duplicate arcs
    /// collapse (with a warning).
    pub fn new(
        n: usize,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
        color_labels: Vec<u64>,
        s: Vertex,
        t: Vertex,
    ) -> Result<Self, GraphError> {
        if color_labels.len() != n {
            return Err(GraphError::ColorCount {
                expected: n,
                found: color_labels.len(),
            });
        }
        for &x in &[s, t] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if s == t {
            return Err(GraphError::SameTerminals(s));
        }
        let mut arcs: Vec<(Vertex, Vertex)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
        }
        let before = arcs.len();
        arcs.sort_unstable();
        arcs.dedup();
        if arcs.len() != before {
            log::warn!("collapsed {} duplicate arc(s)", before - arcs.len());
        }

        let mut distinct = color_labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = color_labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap() as Color)
            .collect();

        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        Ok(ColoredDigraph {
            n,
            arcs,
            colors,
            labels: color_labels,
            s,
            t,
            out_adj,
            in_adj,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn source(&self) -> Vertex {
        self.s
    }

    pub fn target(&self) -> Vertex {
        self.t
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Original (pre-normalization) color label of `v`.
    pub fn color_label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn color_labels(&self) -> &[u64] {
        &self.labels
    }

    /// Number of distinct colors `|C|`.
    pub fn color_count(&self) -> usize {
        self.colors
            .iter()
            .map(|&c| c as usize + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn in_adjacency(&self) -> &[Vec<Vertex>] {
        &self.in_adj
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out_adj[u].contains(&v)
    }

    /// `(u, v)` is an arc iff `(v, u)` is.
    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    /// Some arc joins two vertices of the same color.
    pub fn has_monochromatic_arc(&self) -> bool {
        self.arcs
            .iter()
            .any(|&(u, v)| self.colors[u] == self.colors[v])
    }

    /// Same graph with different terminals.
    pub fn with_terminals(&self, s: Vertex, t: Vertex) -> Result<Self, GraphError> {
        ColoredDigraph::new(self.n, self.arcs.iter().copied(), self.labels.clone(), s, t)
    }

    /// Color sequence of a vertex sequence.
    pub fn color_sequence(&self, vertices: &[Vertex]) -> ColorSeq {
        ColorSeq::new(vertices.iter().map(|&v| self.colors[v]).collect())
    }
}

/// How the length budget `ell` is interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthMode {
    AtMost,
    Exactly,
    /// `ell` is ignored.
    AnyLength,
}

impl LengthMode {
    pub fn as_str(self) -> &'static str {
        match self {
            LengthMode::AtMost => "atmost",
            LengthMode::Exactly => "exact",
            LengthMode::AnyLength => "any",
        }
    }

    pub fn parse(s: &str) -> Option<LengthMode> {
        match s {
            "atmost" => Some(LengthMode::AtMost),
            "exact" => Some(LengthMode::Exactly),
            "any" => Some(LengthMode::AnyLength),
            _ => None,
        }
    }

    /// Whether a walk of length `len` is acceptable under budget `ell`.
    pub fn admits(self, len: usize, ell: usize) -> bool {
        match self {
            LengthMode::AtMost => len <= ell,
            LengthMode::Exactly => len == ell,
            LengthMode::AnyLength => true,
        }
    }
}

impl fmt::Display for LengthMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Locality `r`, length budget `ell` and how to read the budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Query {
    pub r: usize,
    pub ell: usize,
    pub mode: LengthMode,
}

impl Query {
    pub fn at_most(r: usize, ell: usize) -> Self {
        Query {
            r,
            ell,
            mode: LengthMode::AtMost,
        }
    }

    pub fn exactly(r: usize, ell: usize) -> Self {
        Query {
            r,
            ell,
            mode: LengthMode::Exactly,
        }
    }

    pub fn any_length(r: usize) -> Self {
        Query {
            r,
            ell: 0,
            mode: LengthMode::AnyLength,
        }
    }
}

/// An explicit s-t walk or path returned by a solver.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: Vec<Vertex>,
}

impl Witness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Witness { vertices }
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// No vertex repeats.
    pub fn is_path(&self) -> bool {
        let mut seen = self.vertices.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YES {}", self.len())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// `d(v) = dist(v, t)` by reverse breadth-first search; `None` if `v`
/// cannot reach `t`.
pub fn dist_to_target(g: &ColoredDigraph) -> Vec<Option<usize>> {
    reverse_bfs(g.vertex_count(), g.in_adjacency(), g.target())
}

pub(crate) fn reverse_bfs(n: usize, in_adj: &[Vec<Vertex>], target: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; n];
    dist[target] = Some(0);
    let mut queue = VecDeque::from([target]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].unwrap();
        for &u in &in_adj[v] {
            if dist[u].is_none() {
                dist[u] = Some(dv + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Shortest s-t path over the arcs accepted by `keep`.
pub(crate) fn bfs_path(
    g: &ColoredDigraph,
    keep: impl Fn(Vertex, Vertex) -> bool,
) -> Option<Witness> {
    let n = g.vertex_count();
    let mut parent: Vec<Option<Vertex>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[g.source()] = true;
    let mut queue = VecDeque::from([g.source()]);
    while let Some(u) = queue.pop_front() {
        if u == g.target() {
            let mut path = vec![u];
            let mut cur = u;
            while let Some(p) = parent[cur] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            return Some(Witness::new(path));
        }
        for &v in g.out_neighbors(u) {
            if !seen[v] && keep(u, v) {
                seen[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    None
}

/// An s-t walk with exactly `ell` arcs, ignoring colors.
pub(crate) fn exact_length_walk(g: &ColoredDigraph, ell: usize) -> Option<Witness> {
    let n = g.vertex_count();
    let d = dist_to_target(g);
    let mut layers: Vec<Vec<Option<Vertex>>> = Vec::with_capacity(ell + 1);
    let mut reached = vec![false; n];
    reached[g.source()] = true;
    layers.push(vec![None; n]);
    for p in 1..=ell {
        let mut next = vec![false; n];
        let mut parents = vec![None; n];
        for u in (0..n).filter(|&u| reached[u]) {
            for &v in g.out_neighbors(u) {
                let fits = d[v].is_some_and(|dv| p + dv <= ell);
                if fits && !next[v] {
                    next[v] = true;
                    parents[v] = Some(u);
                }
            }
        }
        layers.push(parents);
        reached = next;
    }
    if !reached[g.target()] {
        return None;
    }
    let mut path = vec![g.target()];
    let mut cur = g.target();
    for p in (1..=ell).rev() {
        cur = layers[p][cur].unwrap();
        path.push(cur);
    }
    path.reverse();
    Some(Witness::new(path))
}
