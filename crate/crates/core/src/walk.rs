//! Representative-family dynamic program for r-rainbow s-t walks.
//!
//! Cell `(p, v)` holds suffix windows of length `min(p + 1, r)` of r-rainbow
//! length-`p` s-v walks. A window extends along an arc `(u, v)` whenever
//! `c(v)` is not in it, and every cell is pruned to an ordered
//! representative, so cells stay bounded by `(r e)^r` members.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use log::debug;

use crate::colors::ColorSeq;
use crate::error::SolveError;
use crate::graph::{
    bfs_path, dist_to_target, exact_length_walk, ColoredDigraph, LengthMode, Query, Vertex, Witness,
};
use crate::oracle;
use crate::repfam::{RepresentativeEngine, SeqFamily};
use crate::stats::{Solution, SolveOptions, SolveStats};

/// Back-pointer to the entry a window was extended from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Origin {
    pub vertex: Vertex,
    pub index: usize,
}

/// One stored window of a DP cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkEntry {
    pub window: ColorSeq,
    pub origin: Option<Origin>,
}

/// The family of a cell `(step, vertex)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WalkDPCell {
    pub entries: Vec<WalkEntry>,
}

/// Levels of the DP; `levels[p][v]` is the cell `(p, v)`.
#[derive(Clone, Debug, Default)]
pub struct WalkTable {
    pub levels: Vec<Vec<WalkDPCell>>,
}

impl WalkTable {
    fn trace(&self, p: usize, v: Vertex, index: usize) -> Witness {
        let mut path = vec![v];
        let mut entry = &self.levels[p][v].entries[index];
        let mut level = p;
        while let Some(o) = entry.origin {
            level -= 1;
            path.push(o.vertex);
            entry = &self.levels[level][o.vertex].entries[o.index];
        }
        path.reverse();
        Witness::new(path)
    }
}

/// Decides whether an r-rainbow s-t walk of length at most (or exactly)
/// `q.ell` exists and returns one. Any-length queries use the cap backend.
pub fn solve_walk(g: &ColoredDigraph, q: Query) -> Result<Option<Witness>, SolveError> {
    Ok(solve_walk_with(g, q, &SolveOptions::default())?.witness)
}

pub fn solve_walk_with(
    g: &ColoredDigraph,
    q: Query,
    opts: &SolveOptions,
) -> Result<Solution, SolveError> {
    match q.mode {
        LengthMode::AnyLength => {
            let witness = any_length_witness(g, q.r, AnyLengthBackend::Cap, opts)?;
            Ok(Solution {
                witness,
                stats: SolveStats::default(),
            })
        }
        _ => run_dp(g, q, opts).map(|(solution, _)| solution),
    }
}

/// Like [`solve_walk_with`] but also hands back the DP table for inspection.
pub fn solve_walk_table(
    g: &ColoredDigraph,
    q: Query,
    opts: &SolveOptions,
) -> Result<(Solution, WalkTable), SolveError> {
    if q.mode == LengthMode::AnyLength {
        return Err(SolveError::Unsupported(
            "the walk table is built for a fixed length budget".into(),
        ));
    }
    run_dp(g, q, opts)
}

fn run_dp(
    g: &ColoredDigraph,
    q: Query,
    opts: &SolveOptions,
) -> Result<(Solution, WalkTable), SolveError> {
    let Query { r, ell, mode } = q;
    let n = g.vertex_count();
    let (s, t) = (g.source(), g.target());
    let mut stats = SolveStats::default();
    let mut table = WalkTable::default();

    if r == 0 {
        let witness = match mode {
            LengthMode::Exactly => exact_length_walk(g, ell),
            _ => bfs_path(g, |_, _| true).filter(|w| w.len() <= ell),
        };
        return Ok((Solution { witness, stats }, table));
    }

    let d = dist_to_target(g);
    let pruned = d.iter().filter(|x| x.is_none()).count();
    if pruned > 0 {
        debug!("{pruned} vertices cannot reach t and are pruned");
    }
    let Some(ds) = d[s] else {
        return Ok((
            Solution {
                witness: None,
                stats,
            },
            table,
        ));
    };
    if ds > ell {
        return Ok((
            Solution {
                witness: None,
                stats,
            },
            table,
        ));
    }
    let max_d = d.iter().flatten().copied().max().unwrap_or(0);

    let mut engine = RepresentativeEngine::new(opts.backend);
    let mut level0 = vec![WalkDPCell::default(); n];
    level0[s].entries.push(WalkEntry {
        window: ColorSeq::empty().shifted(g.color(s), r),
        origin: None,
    });
    stats.record(0, level0.iter().map(|c| c.entries.len()));
    table.levels.push(level0);

    // Unpruned levels are a function of the previous level, so a repeated
    // level means nothing new can appear.
    let mut seen: HashMap<Vec<Vec<ColorSeq>>, usize> = HashMap::new();

    for p in 1..=ell {
        let prev = &table.levels[p - 1];
        let mut level = vec![WalkDPCell::default(); n];
        for v in 0..n {
            let Some(dv) = d[v] else { continue };
            if p + dv > ell {
                continue;
            }
            let cv = g.color(v);
            let mut fam: SeqFamily<Origin> = SeqFamily::new(r);
            for &u in g.in_neighbors(v) {
                for (index, e) in prev[u].entries.iter().enumerate() {
                    if !e.window.contains(cv) {
                        fam.push(e.window.shifted(cv, r), Origin { vertex: u, index })?;
                    }
                }
            }
            if fam.is_empty() {
                continue;
            }
            let rep = engine.ordered(fam)?;
            level[v].entries = rep
                .into_members()
                .into_iter()
                .map(|(window, o)| WalkEntry {
                    window,
                    origin: Some(o),
                })
                .collect();
        }
        stats.record(p, level.iter().map(|c| c.entries.len()));
        let empty = level.iter().all(|c| c.entries.is_empty());
        let hit = !level[t].entries.is_empty() && (mode == LengthMode::AtMost || p == ell);
        let signature = (mode == LengthMode::AtMost && p + max_d <= ell).then(|| {
            level
                .iter()
                .map(|c| c.entries.iter().map(|e| e.window.clone()).collect())
                .collect::<Vec<Vec<ColorSeq>>>()
        });
        table.levels.push(level);
        if hit {
            let witness = table.trace(p, t, 0);
            return Ok((
                Solution {
                    witness: Some(witness),
                    stats,
                },
                table,
            ));
        }
        if empty {
            break;
        }
        if let Some(sig) = signature {
            if let Some(earlier) = seen.insert(sig, p) {
                debug!("level {p} repeats level {earlier}; stopping");
                break;
            }
        }
    }
    Ok((
        Solution {
            witness: None,
            stats,
        },
        table,
    ))
}

/// How [`solve_walk_any_length`] decides.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum AnyLengthBackend {
    /// The walk DP with the length cap of [`any_length_cap`].
    #[default]
    Cap,
    /// Reachability over (vertex, window) states.
    Product,
}

impl AnyLengthBackend {
    pub fn as_str(self) -> &'static str {
        match self {
            AnyLengthBackend::Cap => "cap",
            AnyLengthBackend::Product => "product",
        }
    }
}

impl fmt::Display for AnyLengthBackend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AnyLengthBackend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cap" => Ok(AnyLengthBackend::Cap),
            "product" => Ok(AnyLengthBackend::Product),
            other => Err(format!(
                "unknown any-length backend '{other}' (expected cap or product)"
            )),
        }
    }
}

/// `n * ceil(((r - 1) e)^(r - 1))`, taking `0^0 = 1`. Saturates.
pub fn any_length_cap(n: usize, r: usize) -> u128 {
    let per_vertex = if r <= 1 {
        1.0
    } else {
        (((r - 1) as f64) * std::f64::consts::E)
            .powi(r as i32 - 1)
            .ceil()
    };
    if !per_vertex.is_finite() || per_vertex >= u128::MAX as f64 {
        return u128::MAX;
    }
    (per_vertex as u128).saturating_mul(n as u128)
}

/// Whether any r-rainbow s-t walk exists.
pub fn solve_walk_any_length(
    g: &ColoredDigraph,
    r: usize,
    backend: AnyLengthBackend,
) -> Result<bool, SolveError> {
    Ok(any_length_witness(g, r, backend, &SolveOptions::default())?.is_some())
}

/// [`solve_walk_any_length`] with a witness.
pub fn any_length_witness(
    g: &ColoredDigraph,
    r: usize,
    backend: AnyLengthBackend,
    opts: &SolveOptions,
) -> Result<Option<Witness>, SolveError> {
    match backend {
        AnyLengthBackend::Product => {
            oracle::oracle_walk_with_ceiling(g, Query::any_length(r), opts.state_ceiling)
        }
        AnyLengthBackend::Cap => {
            let cap = any_length_cap(g.vertex_count(), r);
            if cap > opts.cap_ceiling {
                return Err(SolveError::CapExceeded {
                    cap,
                    ceiling: opts.cap_ceiling,
                });
            }
            Ok(run_dp(g, Query::at_most(r, cap as usize), opts)?.0.witness)
        }
    }
}

/// Shortest 1-rainbow s-t walk: BFS after deleting monochromatic arcs. The
/// result is a path; `None` if it is longer than `ell`.
pub fn solve_r1(g: &ColoredDigraph, ell: usize) -> Option<Witness> {
    bfs_path(g, |u, v| g.color(u) != g.color(v)).filter(|w| w.len() <= ell)
}
