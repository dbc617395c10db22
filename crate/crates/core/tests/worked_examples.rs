//! Small hand-checkable instances, each judged by an independent
//! brute-force referee.

use locally_rainbow::colors::{pi_flat, pi_prime_flat};
use locally_rainbow::instances::{
    gen_phs_instance, gen_random, parse_instance, write_instance, PhsInput,
};
use locally_rainbow::oracle::{oracle_path, oracle_phs, oracle_walk};
use locally_rainbow::repfam::check::unserved_continuation;
use locally_rainbow::{
    build_band, compute_p_q_tau, dist_to_target, distance_separators, is_locally_rainbow, pi,
    pi_prime, r_compatible, solve_detour, solve_path, solve_r1, solve_r2_symmetric, solve_walk,
    solve_walk_any_length, AnyLengthBackend, Backend, BandKind, Color, ColorSeq, ColoredDigraph,
    EncodedPair, Query, Vertex, Witness,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pairs(v: &[(Color, usize)]) -> Vec<EncodedPair> {
    let mut out: Vec<EncodedPair> = v
        .iter()
        .map(|&(color, position)| EncodedPair { color, position })
        .collect();
    out.sort();
    out
}

fn symmetric(
    n: usize,
    edges: &[(usize, usize)],
    labels: &[u64],
    s: usize,
    t: usize,
) -> ColoredDigraph {
    let arcs: Vec<(usize, usize)> = edges.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
    ColoredDigraph::new(n, arcs, labels.to_vec(), s, t).unwrap()
}

#[test]
fn rainbow_windows() {
    assert!(is_locally_rainbow(&[1, 2, 3, 1], 2));
    assert!(!is_locally_rainbow(&[1, 2, 1], 2));
}

#[test]
fn compatibility_examples() {
    assert!(r_compatible(&[1, 2], &[3, 1], 2));
    assert!(!r_compatible(&[1, 2], &[3, 2], 2));
}

#[test]
fn encoding_examples() {
    assert_eq!(pi(&[1, 2], 2), pairs(&[(1, 1), (2, 1), (2, 2)]));
    assert_eq!(pi(&[7], 1), pairs(&[(7, 1)]));
    assert_eq!(pi_prime(&[3, 1], 2), pairs(&[(3, 1), (1, 2)]));
    assert_eq!(pi_prime(&[4, 5, 6], 2), pairs(&[(4, 1), (5, 2)]));
    // the flat ids of the two sides share the same universe
    assert!(pi_flat(&[1, 2], 2)
        .iter()
        .all(|x| !pi_prime_flat(&[3, 1], 2).contains(x)));
}

#[test]
fn chain_instances() {
    let ok = ColoredDigraph::new(3, [(0, 1), (1, 2)], vec![1, 2, 3], 0, 2).unwrap();
    assert_eq!(
        solve_walk(&ok, Query::at_most(2, 2))
            .unwrap()
            .unwrap()
            .vertices,
        vec![0, 1, 2]
    );
    let bad = ColoredDigraph::new(3, [(0, 1), (1, 2)], vec![1, 2, 1], 0, 2).unwrap();
    assert!(solve_walk(&bad, Query::at_most(2, 2)).unwrap().is_none());
    assert!(oracle_walk(&bad, Query::at_most(2, 2)).unwrap().is_none());
}

#[test]
fn same_colored_pair() {
    let g = ColoredDigraph::new(2, [(0, 1)], vec![1, 1], 0, 1).unwrap();
    assert!(!solve_walk_any_length(&g, 1, AnyLengthBackend::Cap).unwrap());
    assert!(!solve_walk_any_length(&g, 1, AnyLengthBackend::Product).unwrap());
    assert!(solve_r1(&g, 10).is_none());
}

#[test]
fn walk_needs_revisit() {
    // 0 -> 1 -> 2 -> 0 -> 1 -> 3 is the only way to use exactly five steps.
    let g =
        ColoredDigraph::new(4, [(0, 1), (1, 2), (2, 0), (1, 3)], vec![0, 1, 2, 3], 0, 3).unwrap();
    let q = Query::exactly(2, 5);
    assert!(solve_walk(&g, q).unwrap().is_some());
    assert!(oracle_walk(&g, q).unwrap().is_some());
    assert!(solve_path(&g, q).unwrap().is_none());
    assert!(oracle_path(&g, q).is_none());
}

#[test]
fn r2_symmetric_examples() {
    let tri = symmetric(3, &[(0, 1), (1, 2)], &[1, 2, 3], 0, 2);
    assert_eq!(
        solve_r2_symmetric(&tri, 2).unwrap().unwrap().vertices,
        vec![0, 1, 2]
    );
    let alt = symmetric(4, &[(0, 1), (1, 2), (2, 3)], &[1, 2, 1, 2], 0, 3);
    assert!(solve_r2_symmetric(&alt, 10).unwrap().is_none());
    assert!(oracle_walk(&alt, Query::at_most(2, 10)).unwrap().is_none());
}

#[test]
fn one_step_detour() {
    let g = ColoredDigraph::new(
        6,
        [(0, 1), (1, 5), (0, 2), (2, 3), (3, 5), (2, 4)],
        vec![0, 1, 2, 3, 4, 0],
        0,
        5,
    )
    .unwrap();
    assert!(solve_detour(&g, 2, 0).unwrap().is_none());
    let w = solve_detour(&g, 2, 1).unwrap().unwrap();
    assert_eq!(w.len(), 3);
    assert!(oracle_path(&g, Query::exactly(2, 3)).is_some());
}

#[test]
fn separators_of_shortest_and_bumped_paths() {
    // 0 -> 1 -> 2 -> 3 with a shortcut 0 -> 2, so d = (2, 2, 1, 0) along 0,1,2,3
    let g =
        ColoredDigraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 2)], vec![0, 1, 2, 3], 0, 3).unwrap();
    let d = dist_to_target(&g);
    assert_eq!(
        distance_separators(&Witness::new(vec![0, 2, 3]), &d),
        vec![0, 1, 2]
    );
    assert_eq!(
        distance_separators(&Witness::new(vec![0, 1, 2, 3]), &d),
        vec![2, 3]
    );
}

#[test]
fn band_contains_segments_between_separators() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut checked = 0;
    for seed in 0..300 {
        let (g, _) = gen_random(rng.gen_range(4..=9), 0.35, 4, 2, 0, seed).unwrap();
        let d = dist_to_target(&g);
        let Some(ds) = d[g.source()] else { continue };
        for k in 1..=3 {
            let Some(w) = solve_detour(&g, 2, k).unwrap() else {
                continue;
            };
            assert!(w.len() <= ds + k as usize);
            let seps = distance_separators(&w, &d);
            for pair in seps.windows(2) {
                let (a, b) = (pair[0], pair[1]);
                let band = build_band(&g, w.vertices[a], w.vertices[b], &d);
                for &x in &w.vertices[a..=b] {
                    assert!(
                        band.contains(x),
                        "seed {seed}: {x} outside band of {:?}",
                        band
                    );
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn band_from_source_covers_everything_but_t() {
    let (g, _) = gen_random(8, 0.4, 3, 2, 0, 5).unwrap();
    let d = dist_to_target(&g);
    let band = build_band(&g, g.source(), g.target(), &d);
    assert_eq!(band.kind, BandKind::FromSource);
    for (v, dv) in d.iter().enumerate() {
        let expect = v == g.target() || v == g.source() || dv.is_some_and(|x| x > 0);
        assert_eq!(band.contains(v), expect);
    }
}

/// Every simple length-`q` u-v path inside `vertices`.
fn band_paths(
    g: &ColoredDigraph,
    vertices: &[Vertex],
    u: Vertex,
    v: Vertex,
    q: usize,
) -> Vec<Vec<Vertex>> {
    fn go(
        g: &ColoredDigraph,
        inside: &[Vertex],
        v: Vertex,
        q: usize,
        cur: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let last = *cur.last().unwrap();
        if cur.len() == q + 1 {
            if last == v {
                out.push(cur.clone());
            }
            return;
        }
        for &x in g.out_neighbors(last) {
            if inside.contains(&x) && !cur.contains(&x) {
                cur.push(x);
                go(g, inside, v, q, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, vertices, v, q, &mut vec![u], &mut out);
    out
}

#[test]
fn band_families_against_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut nonempty = 0;
    for seed in 0..200 {
        let r = rng.gen_range(1..=3);
        let (g, _) = gen_random(rng.gen_range(4..=8), 0.4, 4, r, 0, 100 + seed).unwrap();
        let d = dist_to_target(&g);
        let n = g.vertex_count();
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let (Some(du), Some(dv)) = (d[u], d[v]) else {
            continue;
        };
        if u != g.source() && du <= dv {
            continue;
        }
        let band = build_band(&g, u, v, &d);
        let tau_len = if u == g.source() {
            0
        } else {
            rng.gen_range(0..r)
        };
        let tau: Vec<Color> = (0..tau_len).map(|_| rng.gen_range(0..6)).collect();
        if !is_locally_rainbow(&tau, r) {
            continue;
        }
        let tau = ColorSeq::from(tau);
        for q in 1..=3 {
            let keep = (q + 1).min(r);
            let mut full: Vec<ColorSeq> = Vec::new();
            for p in band_paths(&g, &band.vertices, u, v, q) {
                let colors = g.color_sequence(&p);
                if is_locally_rainbow(tau.concat(&colors).as_slice(), r) {
                    full.push(colors.suffix(keep));
                }
            }
            for backend in [Backend::Algebraic, Backend::Exhaustive] {
                let fam = compute_p_q_tau(&g, &band, q, &tau, r, backend).unwrap();
                for (sigma, seg) in fam.members() {
                    assert_eq!(seg.len(), q + 1);
                    assert_eq!((seg[0], seg[q]), (u, v));
                    let colors = g.color_sequence(seg);
                    assert!(is_locally_rainbow(tau.concat(&colors).as_slice(), r));
                    assert_eq!(&colors.suffix(keep), sigma);
                    assert!(seg.iter().all(|x| band.contains(*x)));
                }
                let kept: Vec<ColorSeq> = fam.sequences().cloned().collect();
                assert_eq!(kept.is_empty(), full.is_empty(), "seed {seed} q {q}");
                assert!(
                    unserved_continuation(&full, &kept, r).is_none(),
                    "seed {seed} q {q}"
                );
            }
            nonempty += !full.is_empty() as usize;
        }
    }
    assert!(nonempty > 10);
}

#[test]
fn phs_small_cases() {
    let yes = PhsInput::new(1, vec![vec![(1, 1)]]);
    let (g, q) = gen_phs_instance(&yes).unwrap();
    assert!(solve_walk(&g, q).unwrap().is_some());

    let no = PhsInput::new(2, vec![vec![(1, 1)], vec![(1, 2)]]);
    assert!(oracle_phs(2, &no.sets).is_none());
    let (g, q) = gen_phs_instance(&no).unwrap();
    assert!(solve_walk(&g, q).unwrap().is_none());

    let column = PhsInput::new(3, vec![vec![(1, 1)], vec![(2, 1)], vec![(3, 1)]]);
    assert!(oracle_phs(3, &column.sets).is_none());
    let (g, q) = gen_phs_instance(&column).unwrap();
    assert!(solve_walk(&g, q).unwrap().is_none());
}

#[test]
fn three_set_phs_survives_text_round_trip() {
    let input = PhsInput::new(
        3,
        vec![
            vec![(1, 2), (2, 2)],
            vec![(1, 1), (2, 2), (2, 3), (3, 3)],
            vec![(2, 1), (3, 1), (3, 2)],
        ],
    );
    assert!(oracle_phs(3, &input.sets).is_some());
    let (g, q) = gen_phs_instance(&input).unwrap();
    assert_eq!(dist_to_target(&g)[g.source()], Some(12));
    let (g2, q2) = parse_instance(&write_instance(&g, &q)).unwrap();
    assert_eq!(q2, q);
    assert!(solve_walk(&g2, q2).unwrap().is_some());
}

#[test]
fn complete_monochromatic_graph_is_no() {
    for r in 1..=3 {
        let (g, q) = gen_random(5, 1.0, 1, r, 6, 3).unwrap();
        assert!(solve_walk(&g, q).unwrap().is_none());
        assert!(solve_path(&g, q).unwrap().is_none());
    }
}
