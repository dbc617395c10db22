//! Representative-family dynamic program for r-rainbow s-t paths.
//!
//! A partial path ending in `v` is stored as the set `X ⊎ π(σ)` over the
//! universe `V ⊎ (C × [r])`, flattened to `[0, n) ∪ [n, n + |C| r)`: `X` is
//! its vertex set and `σ` its suffix window. A member avoids an obstruction
//! `Y ⊎ π'(ρ)` exactly when the path avoids `Y` and may be continued by
//! `ρ`, so one unordered representative per cell prunes both conditions.

use std::collections::VecDeque;

use log::debug;

use crate::colors::{decode_pi, pi_flat, Color, ColorSeq, EncodedPair};
use crate::detour::Band;
use crate::error::SolveError;
use crate::graph::{bfs_path, reverse_bfs, ColoredDigraph, LengthMode, Query, Vertex, Witness};
use crate::repfam::{Backend, LabeledSetFamily, RepresentativeEngine, SeqFamily};
use crate::stats::{Solution, SolveOptions, SolveStats};
use crate::walk::Origin;

/// One stored partial path of a cell `(step, vertex)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathEntry {
    /// Sorted vertex set `X`.
    pub vertices: Vec<Vertex>,
    pub window: ColorSeq,
    pub origin: Option<Origin>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathDPCell {
    pub entries: Vec<PathEntry>,
}

/// `levels[p][v]` is the cell `(p, v)`.
#[derive(Clone, Debug, Default)]
pub struct PathTable {
    pub levels: Vec<Vec<PathDPCell>>,
}

impl PathTable {
    fn trace(&self, p: usize, v: Vertex, index: usize) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut entry = &self.levels[p][v].entries[index];
        let mut level = p;
        while let Some(o) = entry.origin {
            level -= 1;
            path.push(o.vertex);
            entry = &self.levels[level][o.vertex].entries[o.index];
        }
        path.reverse();
        path
    }
}

/// The bare data the DP needs, so auxiliary graphs are cheap to build.
pub(crate) struct PathCore {
    pub colors: Vec<Color>,
    pub in_adj: Vec<Vec<Vertex>>,
    pub source: Vertex,
    pub target: Vertex,
}

impl PathCore {
    fn from_graph(g: &ColoredDigraph) -> Self {
        PathCore {
            colors: g.colors().to_vec(),
            in_adj: g.in_adjacency().to_vec(),
            source: g.source(),
            target: g.target(),
        }
    }

    fn n(&self) -> usize {
        self.colors.len()
    }
}

/// Runs the DP up to length `ell`. In at-most mode it stops at the first
/// level whose target cell is nonempty and returns that level.
pub(crate) fn path_dp(
    core: &PathCore,
    r: usize,
    ell: usize,
    mode: LengthMode,
    engine: &mut RepresentativeEngine,
    stats: &mut SolveStats,
) -> Result<(PathTable, Option<usize>), SolveError> {
    let n = core.n();
    let (s, t) = (core.source, core.target);
    let color_count = core.colors.iter().max().map_or(0, |&c| c as usize + 1);
    let universe = n + color_count * r;
    let mut table = PathTable::default();

    let d = reverse_bfs(n, &core.in_adj, t);
    let Some(ds) = d[s] else {
        return Ok((table, None));
    };
    if ds > ell {
        return Ok((table, None));
    }

    let mut level0 = vec![PathDPCell::default(); n];
    level0[s].entries.push(PathEntry {
        vertices: vec![s],
        window: ColorSeq::empty().shifted(core.colors[s], r),
        origin: None,
    });
    stats.record(0, level0.iter().map(|c| c.entries.len()));
    table.levels.push(level0);

    for p in 1..=ell {
        let budget = ell - p + r;
        stats.budgets.push(budget);
        let prev = &table.levels[p - 1];
        let mut level = vec![PathDPCell::default(); n];
        for v in 0..n {
            let Some(dv) = d[v] else { continue };
            if p + dv > ell {
                continue;
            }
            let cv = core.colors[v];
            let mut fam: LabeledSetFamily<(ColorSeq, Origin)> = LabeledSetFamily::new(universe);
            for &u in &core.in_adj[v] {
                if u == t {
                    continue;
                }
                for (index, e) in prev[u].entries.iter().enumerate() {
                    if e.window.contains(cv) || e.vertices.binary_search(&v).is_ok() {
                        continue;
                    }
                    let window = e.window.shifted(cv, r);
                    let mut set = e.vertices.clone();
                    let at = set.binary_search(&v).unwrap_err();
                    set.insert(at, v);
                    set.extend(pi_flat(window.as_slice(), r).into_iter().map(|x| x + n));
                    fam.push(set, (window, Origin { vertex: u, index }))?;
                }
            }
            if fam.is_empty() {
                continue;
            }
            let rep = engine.unordered(fam, budget)?;
            level[v].entries = rep
                .into_members()
                .into_iter()
                .map(|(set, (window, origin))| {
                    let split = set.partition_point(|&x| x < n);
                    let encoded: Vec<EncodedPair> = set[split..]
                        .iter()
                        .map(|&x| EncodedPair::unflatten(x - n, r))
                        .collect();
                    let decoded = if r == 0 {
                        Some(ColorSeq::empty())
                    } else {
                        decode_pi(&encoded, window.len(), r)
                    };
                    assert_eq!(
                        decoded.as_ref(),
                        Some(&window),
                        "encoded window does not decode uniquely"
                    );
                    PathEntry {
                        vertices: set[..split].to_vec(),
                        window,
                        origin: Some(origin),
                    }
                })
                .collect();
        }
        stats.record(p, level.iter().map(|c| c.entries.len()));
        let empty = level.iter().all(|c| c.entries.is_empty());
        let hit = !level[t].entries.is_empty() && (mode == LengthMode::AtMost || p == ell);
        table.levels.push(level);
        if hit {
            return Ok((table, Some(p)));
        }
        if empty {
            break;
        }
    }
    Ok((table, None))
}

/// Decides whether an r-rainbow s-t path of length at most (or exactly)
/// `q.ell` exists and returns one. Any-length queries use `ell = n - 1`.
pub fn solve_path(g: &ColoredDigraph, q: Query) -> Result<Option<Witness>, SolveError> {
    Ok(solve_path_with(g, q, &SolveOptions::default())?.witness)
}

pub fn solve_path_with(
    g: &ColoredDigraph,
    q: Query,
    opts: &SolveOptions,
) -> Result<Solution, SolveError> {
    let (ell, mode) = match q.mode {
        LengthMode::AnyLength => (g.vertex_count().saturating_sub(1), LengthMode::AtMost),
        m => (q.ell, m),
    };
    let mut stats = SolveStats::default();
    if q.r == 0 && mode == LengthMode::AtMost {
        let witness = bfs_path(g, |_, _| true).filter(|w| w.len() <= ell);
        return Ok(Solution { witness, stats });
    }
    let core = PathCore::from_graph(g);
    let mut engine = RepresentativeEngine::new(opts.backend);
    let (table, hit) = path_dp(&core, q.r, ell, mode, &mut engine, &mut stats)?;
    let witness = hit.map(|p| Witness::new(table.trace(p, core.target, 0)));
    if let Some(w) = &witness {
        debug!("path of length {} found", w.len());
    }
    Ok(Solution { witness, stats })
}

/// Ordered representative of the windows `σ` (length `min(q + 1, r)`) that
/// end r-rainbow length-`q` u-v paths inside `band` which fit `tau`, the
/// colors preceding `u`. Each window is tagged with its u..v path.
pub fn compute_p_q_tau(
    g: &ColoredDigraph,
    band: &Band,
    q: usize,
    tau: &ColorSeq,
    r: usize,
    backend: Backend,
) -> Result<SeqFamily<Vec<Vertex>>, SolveError> {
    let mut engine = RepresentativeEngine::new(backend);
    p_q_tau(g, band, q, tau, r, &mut engine)
}

pub(crate) fn p_q_tau(
    g: &ColoredDigraph,
    band: &Band,
    q: usize,
    tau: &ColorSeq,
    r: usize,
    engine: &mut RepresentativeEngine,
) -> Result<SeqFamily<Vec<Vertex>>, SolveError> {
    let b = band.vertices.len();
    let local = |w: Vertex| band.vertices.binary_search(&w).ok();
    let (lu, lv) = match (local(band.u), local(band.v)) {
        (Some(a), Some(c)) => (a, c),
        _ => return Err(SolveError::Precondition("band must contain u and v".into())),
    };
    let plen = tau.len();
    let mut colors: Vec<Color> = band.vertices.iter().map(|&w| g.color(w)).collect();
    colors.extend_from_slice(tau.as_slice());
    let mut in_adj: Vec<Vec<Vertex>> = vec![Vec::new(); b + plen];
    for (i, &w) in band.vertices.iter().enumerate() {
        in_adj[i] = g.in_neighbors(w).iter().filter_map(|&x| local(x)).collect();
    }
    for i in 1..plen {
        in_adj[b + i].push(b + i - 1);
    }
    if plen > 0 {
        in_adj[lu].push(b + plen - 1);
    }
    let core = PathCore {
        colors,
        in_adj,
        source: if plen > 0 { b } else { lu },
        target: lv,
    };

    let mut out: SeqFamily<Vec<Vertex>> = SeqFamily::new(r);
    let total = plen + q;
    let mut stats = SolveStats::default();
    let (table, hit) = path_dp(&core, r, total, LengthMode::Exactly, engine, &mut stats)?;
    if hit.is_none() {
        return Ok(out);
    }
    let keep = (q + 1).min(r);
    for (index, e) in table.levels[total][lv].entries.iter().enumerate() {
        let segment: Vec<Vertex> = table.trace(total, lv, index)[plen..]
            .iter()
            .map(|&x| band.vertices[x])
            .collect();
        out.push(e.window.suffix(keep), segment)?;
    }
    Ok(engine.ordered(out)?)
}

/// Shortest 2-rainbow s-t walk in a symmetric digraph without
/// monochromatic arcs, by BFS over (vertex, color of the previous vertex).
pub fn solve_r2_symmetric(g: &ColoredDigraph, ell: usize) -> Result<Option<Witness>, SolveError> {
    if !g.is_symmetric() {
        return Err(SolveError::Precondition("graph is not symmetric".into()));
    }
    if let Some(&(u, v)) = g.arcs().iter().find(|&&(u, v)| g.color(u) == g.color(v)) {
        return Err(SolveError::Precondition(format!(
            "arc ({u}, {v}) joins two vertices of the same color"
        )));
    }
    let n = g.vertex_count();
    let slots = g.color_count() + 1;
    let none = g.color_count();
    let id = |v: Vertex, c: usize| v * slots + c;
    let mut parent: Vec<Option<usize>> = vec![None; n * slots];
    let mut seen = vec![false; n * slots];
    let start = id(g.source(), none);
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        let (u, prev) = (state / slots, state % slots);
        if u == g.target() {
            let mut path = vec![u];
            let mut cur = state;
            while let Some(p) = parent[cur] {
                path.push(p / slots);
                cur = p;
            }
            path.reverse();
            let w = Witness::new(path);
            return Ok((w.len() <= ell).then_some(w));
        }
        for &v in g.out_neighbors(u) {
            if g.color(v) as usize == prev {
                continue;
            }
            let next = id(v, g.color(u) as usize);
            if !seen[next] {
                seen[next] = true;
                parent[next] = Some(state);
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colors::{is_locally_rainbow, r_compatible};
    use crate::detour::{build_band, BandKind};
    use crate::graph::dist_to_target;
    use crate::walk::solve_walk;

    fn graph(
        n: usize,
        arcs: &[(usize, usize)],
        colors: &[u64],
        s: usize,
        t: usize,
    ) -> ColoredDigraph {
        ColoredDigraph::new(n, arcs.iter().copied(), colors.to_vec(), s, t).unwrap()
    }

    fn symmetric(
        n: usize,
        edges: &[(usize, usize)],
        colors: &[u64],
        s: usize,
        t: usize,
    ) -> ColoredDigraph {
        let arcs: Vec<(usize, usize)> = edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        graph(n, &arcs, colors, s, t)
    }

    #[test]
    fn walk_yes_path_no() {
        // s=0 -> a=1 -> b=2 -> a=1 -> t=3 is the only way to spend 4 arcs
        let g = graph(4, &[(0, 1), (1, 2), (2, 1), (1, 3)], &[0, 1, 2, 3], 0, 3);
        assert!(solve_walk(&g, Query::exactly(1, 4)).unwrap().is_some());
        assert!(solve_path(&g, Query::exactly(1, 4)).unwrap().is_none());
        let w = solve_path(&g, Query::at_most(1, 4)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 3]);
    }

    #[test]
    fn path_respects_windows() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (0, 2)], &[1, 2, 1, 3], 0, 3);
        // 0 -> 2 -> 3 has colors 1,1,3: bad; 0 -> 1 -> 2 -> 3 has 1,2,1,3: bad at r = 2
        assert!(solve_path(&g, Query::at_most(2, 5)).unwrap().is_none());
        let w = solve_path(&g, Query::at_most(1, 5)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn budgets_follow_schedule() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 2, 3], 0, 3);
        let sol = solve_path_with(&g, Query::exactly(2, 3), &SolveOptions::default()).unwrap();
        assert!(sol.found());
        assert_eq!(sol.stats.budgets, vec![2 + 3 - 1, 2 + 3 - 2, 2 + 3 - 3]);
    }

    #[test]
    fn p_q_tau_single_arc() {
        // s=0 -> u=1 -> v=2 -> t=3
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 2, 3], 0, 3);
        let d = dist_to_target(&g);
        let band = build_band(&g, 1, 2, &d);
        assert_eq!(band.kind, BandKind::Interior);
        let fam = compute_p_q_tau(
            &g,
            &band,
            1,
            &ColorSeq::from(vec![0]),
            3,
            Backend::Algebraic,
        )
        .unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam.members()[0].0.as_slice(), &[1, 2]);
        assert_eq!(fam.members()[0].1, vec![1, 2]);
        // tau containing c(v) within reach does not fit
        let fam = compute_p_q_tau(
            &g,
            &band,
            1,
            &ColorSeq::from(vec![2]),
            3,
            Backend::Algebraic,
        )
        .unwrap();
        assert!(fam.is_empty());
    }

    #[test]
    fn p_q_tau_from_source_and_fits() {
        let g = graph(
            5,
            &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4)],
            &[0, 1, 2, 1, 3],
            0,
            4,
        );
        let d = dist_to_target(&g);
        let band = build_band(&g, 0, 3, &d);
        assert_eq!(band.kind, BandKind::FromSource);
        let fam =
            compute_p_q_tau(&g, &band, 2, &ColorSeq::empty(), 2, Backend::Exhaustive).unwrap();
        // only 0 -> 2 -> 3 is 2-rainbow (colors 0,2,1)
        assert_eq!(fam.len(), 1);
        let (sigma, seg) = &fam.members()[0];
        assert_eq!(seg, &vec![0, 2, 3]);
        assert_eq!(sigma.as_slice(), &[2, 1]);
        let colors = g.color_sequence(seg);
        assert!(is_locally_rainbow(colors.as_slice(), 2));
        assert!(r_compatible(&[], colors.as_slice(), 2));
    }

    #[test]
    fn r2_triangle() {
        let g = symmetric(3, &[(0, 1), (1, 2)], &[1, 2, 3], 0, 2);
        assert_eq!(
            solve_r2_symmetric(&g, 2).unwrap().unwrap().vertices,
            vec![0, 1, 2]
        );
    }

    #[test]
    fn r2_alternating_path_blocked() {
        let g = symmetric(4, &[(0, 1), (1, 2), (2, 3)], &[1, 2, 1, 2], 0, 3);
        assert_eq!(solve_r2_symmetric(&g, 10).unwrap(), None);
        assert!(solve_walk(&g, Query::at_most(2, 10)).unwrap().is_none());
    }

    #[test]
    fn r2_rejects_bad_inputs() {
        let g = graph(2, &[(0, 1)], &[1, 2], 0, 1);
        assert!(matches!(
            solve_r2_symmetric(&g, 3),
            Err(SolveError::Precondition(_))
        ));
        let g = symmetric(2, &[(0, 1)], &[1, 1], 0, 1);
        assert!(matches!(
            solve_r2_symmetric(&g, 3),
            Err(SolveError::Precondition(_))
        ));
    }
}
