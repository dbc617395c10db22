//! Paths of length `dist(s, t) + k`, solved in time exponential only in
//! `r + k`.
//!
//! With `d(v) = dist(v, t)`, a short-detour path meets a distance separator
//! (a vertex whose `d` is below everything before it and above everything
//! after it) at least every `2k + 1` steps. The DP therefore jumps from
//! separator `u` to separator `v` along segments of length at most `2k + 1`
//! inside the band between them, and bands of consecutive separators are
//! disjoint, so segments never collide.

use std::collections::HashMap;

use log::debug;

use crate::colors::ColorSeq;
use crate::error::SolveError;
use crate::graph::{dist_to_target, ColoredDigraph, LengthMode, Query, Vertex, Witness};
use crate::path::{p_q_tau, solve_path_with};
use crate::repfam::{RepresentativeEngine, SeqFamily};
use crate::stats::{Solution, SolveOptions, SolveStats};
use crate::walk::solve_walk_with;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BandKind {
    /// `u != s`: vertices strictly between `d(v)` and `d(u)`, never `s`.
    Interior,
    /// `u = s`: every vertex farther from `t` than `v`.
    FromSource,
}

/// The vertex set of the subgraph a segment from `u` to `v` may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: BandKind,
    /// Sorted; includes `u` and `v`.
    pub vertices: Vec<Vertex>,
}

impl Band {
    pub fn contains(&self, w: Vertex) -> bool {
        self.vertices.binary_search(&w).is_ok()
    }
}

/// Band of `(u, v)`. Vertices that cannot reach `t` are never included.
pub fn build_band(g: &ColoredDigraph, u: Vertex, v: Vertex, d: &[Option<usize>]) -> Band {
    let s = g.source();
    let kind = if u == s {
        BandKind::FromSource
    } else {
        BandKind::Interior
    };
    let dv = d[v].unwrap_or(usize::MAX);
    let du = d[u].unwrap_or(usize::MAX);
    let mut vertices: Vec<Vertex> = (0..g.vertex_count())
        .filter(|&w| {
            let Some(dw) = d[w] else { return false };
            match kind {
                BandKind::FromSource => dw > dv,
                BandKind::Interior => w != s && dw > dv && dw < du,
            }
        })
        .collect();
    vertices.extend([u, v]);
    vertices.sort_unstable();
    vertices.dedup();
    Band {
        u,
        v,
        kind,
        vertices,
    }
}

/// Indices `i` with `d(v_i)` strictly below every earlier and strictly
/// above every later value.
pub fn distance_separators(path: &Witness, d: &[Option<usize>]) -> Vec<usize> {
    let vals: Vec<usize> = path
        .vertices
        .iter()
        .map(|&v| d[v].unwrap_or(usize::MAX))
        .collect();
    let m = vals.len();
    let mut suffix_max = vec![0usize; m + 1];
    let mut has_later = vec![false; m + 1];
    for i in (0..m).rev() {
        suffix_max[i] = if has_later[i + 1] {
            suffix_max[i + 1].max(vals[i])
        } else {
            vals[i]
        };
        has_later[i] = true;
    }
    let mut prefix_min = usize::MAX;
    let mut out = Vec::new();
    for i in 0..m {
        let later_ok = !has_later[i + 1] || vals[i] > suffix_max[i + 1];
        if vals[i] < prefix_min && later_ok {
            out.push(i);
        }
        prefix_min = prefix_min.min(vals[i]);
    }
    out
}

/// Back-pointer: the entry at `(level, vertex, index)` was continued by
/// `segment`, which runs from `vertex` to the cell's vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetourOrigin {
    pub vertex: Vertex,
    pub level: usize,
    pub index: usize,
    pub segment: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetourEntry {
    pub window: ColorSeq,
    pub origin: Option<DetourOrigin>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DetourDPCell {
    pub entries: Vec<DetourEntry>,
}

/// An r-rainbow s-t path of length at most `dist(s, t) + k`, if any.
pub fn solve_detour(g: &ColoredDigraph, r: usize, k: i64) -> Result<Option<Witness>, SolveError> {
    Ok(solve_detour_with(g, r, k, LengthMode::AtMost, &SolveOptions::default())?.witness)
}

/// `mode` selects between length at most and exactly `dist(s, t) + k`.
pub fn solve_detour_with(
    g: &ColoredDigraph,
    r: usize,
    k: i64,
    mode: LengthMode,
    opts: &SolveOptions,
) -> Result<Solution, SolveError> {
    if mode == LengthMode::AnyLength {
        return Err(SolveError::Unsupported(
            "the detour solver needs a length budget".into(),
        ));
    }
    let d = dist_to_target(g);
    let none = || Ok(Solution::default());
    let Some(ds) = d[g.source()] else {
        return none();
    };
    if k < 0 {
        return none();
    }
    let k = k as usize;
    let ell = ds + k;
    let query = Query { r, ell, mode };
    if k == 0 {
        return solve_walk_with(g, query, opts);
    }
    if r == 0 {
        return solve_path_with(g, query, opts);
    }

    let n = g.vertex_count();
    let s = g.source();
    let t = g.target();
    let mut stats = SolveStats::default();
    let mut engine = RepresentativeEngine::new(opts.backend);
    let mut bands: HashMap<(Vertex, Vertex), Band> = HashMap::new();
    let mut families: HashMap<(Vertex, Vertex, usize, ColorSeq), SeqFamily<Vec<Vertex>>> =
        HashMap::new();

    let mut levels: Vec<Vec<DetourDPCell>> = Vec::with_capacity(ell + 1);
    let mut level0 = vec![DetourDPCell::default(); n];
    level0[s].entries.push(DetourEntry {
        window: ColorSeq::empty().shifted(g.color(s), r),
        origin: None,
    });
    stats.record(0, level0.iter().map(|c| c.entries.len()));
    levels.push(level0);

    for p in 1..=ell {
        let mut level = vec![DetourDPCell::default(); n];
        for v in 0..n {
            if v == s {
                continue;
            }
            let Some(dv) = d[v] else { continue };
            if p + dv > ell {
                continue;
            }
            let want = (p + 1).min(r);
            let mut fam: SeqFamily<DetourOrigin> = SeqFamily::new(r);
            for q in 1..=(2 * k + 1).min(p) {
                let from = p - q;
                for u in 0..n {
                    if u == v || levels[from][u].entries.is_empty() {
                        continue;
                    }
                    if u != s && d[u].is_none_or(|du| du <= dv) {
                        continue;
                    }
                    let band = bands
                        .entry((u, v))
                        .or_insert_with(|| build_band(g, u, v, &d))
                        .clone();
                    for (index, entry) in levels[from][u].entries.iter().enumerate() {
                        let tau_full = &entry.window;
                        let tau = tau_full.without_last();
                        let key = (u, v, q, tau.clone());
                        if !families.contains_key(&key) {
                            let f = p_q_tau(g, &band, q, &tau, r, &mut engine)?;
                            families.insert(key.clone(), f);
                        }
                        let keep_prefix = r.saturating_sub(q).min(from + 1);
                        let sigma_prime = tau_full.suffix(keep_prefix);
                        for (sigma_p, segment) in families[&key].members() {
                            let sigma = sigma_p.suffix(q.min(r));
                            let window = sigma_prime.concat(&sigma);
                            assert_eq!(window.len(), want, "stitched window has the wrong length");
                            let mut full = tau_full.clone();
                            for &w in &segment[1..] {
                                full = full.shifted(g.color(w), usize::MAX);
                            }
                            assert_eq!(window, full.suffix(want), "stitched window mismatch");
                            fam.push(
                                window,
                                DetourOrigin {
                                    vertex: u,
                                    level: from,
                                    index,
                                    segment: segment.clone(),
                                },
                            )?;
                        }
                    }
                }
            }
            if fam.is_empty() {
                continue;
            }
            level[v].entries = engine
                .ordered(fam)?
                .into_members()
                .into_iter()
                .map(|(window, o)| DetourEntry {
                    window,
                    origin: Some(o),
                })
                .collect();
        }
        stats.record(p, level.iter().map(|c| c.entries.len()));
        let hit = !level[t].entries.is_empty() && (mode == LengthMode::AtMost || p == ell);
        levels.push(level);
        if hit {
            let witness = trace(&levels, p, t, 0);
            debug!("detour path of length {} found", witness.len());
            return Ok(Solution {
                witness: Some(witness),
                stats,
            });
        }
    }
    Ok(Solution {
        witness: None,
        stats,
    })
}

fn trace(levels: &[Vec<DetourDPCell>], p: usize, v: Vertex, index: usize) -> Witness {
    let mut pieces: Vec<&[Vertex]> = Vec::new();
    let mut entry = &levels[p][v].entries[index];
    let mut start = v;
    while let Some(o) = &entry.origin {
        pieces.push(&o.segment[1..]);
        entry = &levels[o.level][o.vertex].entries[o.index];
        start = o.vertex;
    }
    let mut path = vec![start];
    for piece in pieces.into_iter().rev() {
        path.extend_from_slice(piece);
    }
    Witness::new(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::solve_path;
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

    #[test]
    fn separators_of_shortest_path() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 2, 3], 0, 3);
        let d = dist_to_target(&g);
        let w = Witness::new(vec![0, 1, 2, 3]);
        assert_eq!(distance_separators(&w, &d), vec![0, 1, 2, 3]);
    }

    #[test]
    fn separators_with_bump() {
        // d-values along the walk: 3, 2, 3, 1, 0
        let d = vec![Some(3), Some(2), Some(3), Some(1), Some(0)];
        let w = Witness::new(vec![0, 1, 2, 3, 4]);
        assert_eq!(distance_separators(&w, &d), vec![3, 4]);
    }

    #[test]
    fn band_cases() {
        // 0 -> 1 -> 2 -> 3, 0 -> 4 -> 3
        let g = graph(
            5,
            &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)],
            &[0, 1, 2, 3, 4],
            0,
            3,
        );
        let d = dist_to_target(&g);
        let b = build_band(&g, 0, 3, &d);
        assert_eq!(b.kind, BandKind::FromSource);
        assert_eq!(b.vertices, vec![0, 1, 2, 3, 4]);
        let b = build_band(&g, 1, 2, &d);
        assert_eq!(b.vertices, vec![1, 2]);
        let b = build_band(&g, 1, 3, &d);
        assert_eq!(b.vertices, vec![1, 2, 3, 4]);
    }

    /// Shortest route 0 -> 1 -> 5 is blocked by a color clash; the one-step
    /// detour 0 -> 2 -> 3 -> 5 is fine.
    fn one_step_detour() -> ColoredDigraph {
        graph(
            6,
            &[(0, 1), (1, 5), (0, 2), (2, 3), (3, 5), (2, 4)],
            &[0, 1, 2, 3, 4, 0],
            0,
            5,
        )
    }

    #[test]
    fn needs_one_step_detour() {
        let g = one_step_detour();
        assert!(solve_detour(&g, 2, 0).unwrap().is_none());
        let w = solve_detour(&g, 2, 1).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 2, 3, 5]);
        assert!(solve_detour(&g, 2, -1).unwrap().is_none());
    }

    #[test]
    fn k_zero_matches_walk() {
        let g = one_step_detour();
        for r in 1..=3 {
            let a = solve_detour(&g, r, 0).unwrap().is_some();
            let b = solve_walk(&g, Query::at_most(r, 2)).unwrap().is_some();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn agrees_with_path_on_small_grid() {
        let arcs = [
            (0, 1),
            (1, 2),
            (2, 7),
            (0, 3),
            (3, 4),
            (4, 7),
            (1, 4),
            (3, 2),
            (4, 5),
            (5, 6),
            (6, 7),
            (2, 5),
        ];
        let g = graph(8, &arcs, &[0, 1, 2, 1, 0, 2, 1, 0], 0, 7);
        let ds = dist_to_target(&g)[0].unwrap();
        for r in 1..=3 {
            for k in 0..=3i64 {
                let a = solve_detour(&g, r, k).unwrap().is_some();
                let b = solve_path(&g, Query::at_most(r, ds + k as usize))
                    .unwrap()
                    .is_some();
                assert_eq!(a, b, "r={r} k={k}");
            }
        }
    }
}
