use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GeneratorError;
use crate::graph::{ColoredDigraph, Query};

fn terminals(n: usize, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let s = rng.gen_range(0..n);
    let mut t = rng.gen_range(0..n - 1);
    if t >= s {
        t += 1;
    }
    (s, t)
}

fn check(n: usize, arc_probability: f64, colors: usize) -> Result<(), GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::Invalid(format!(
            "need at least 2 vertices, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&arc_probability) {
        return Err(GeneratorError::Invalid(format!(
            "arc probability {arc_probability} outside [0, 1]"
        )));
    }
    if colors == 0 {
        return Err(GeneratorError::Invalid("need at least one color".into()));
    }
    Ok(())
}

/// Seeded random instance: every ordered pair `u != v` is an arc with
/// probability `arc_probability`, colors are uniform in `[0, colors)`, and
/// `s != t` are uniform. The query is "length at most `ell`".
pub fn gen_random(
    n: usize,
    arc_probability: f64,
    colors: usize,
    r: usize,
    ell: usize,
    seed: u64,
) -> Result<(ColoredDigraph, Query), GeneratorError> {
    check(n, arc_probability, colors)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<u64> = (0..n).map(|_| rng.gen_range(0..colors as u64)).collect();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(arc_probability) {
                arcs.push((u, v));
            }
        }
    }
    let (s, t) = terminals(n, &mut rng);
    Ok((
        ColoredDigraph::new(n, arcs, labels, s, t)?,
        Query::at_most(r, ell),
    ))
}

/// Seeded random symmetric instance whose adjacent vertices always differ
/// in color: each pair `{u, v}` of distinct colors is joined in both
/// directions with probability `edge_probability`.
pub fn gen_random_symmetric(
    n: usize,
    edge_probability: f64,
    colors: usize,
    r: usize,
    ell: usize,
    seed: u64,
) -> Result<(ColoredDigraph, Query), GeneratorError> {
    check(n, edge_probability, colors)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<u64> = (0..n).map(|_| rng.gen_range(0..colors as u64)).collect();
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] != labels[v] && rng.gen_bool(edge_probability) {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
    }
    let (s, t) = terminals(n, &mut rng);
    Ok((
        ColoredDigraph::new(n, arcs, labels, s, t)?,
        Query::at_most(r, ell),
    ))
}
