//! Permutation hitting set to r-rainbow walks.
//!
//! Every set `F_q` gets a block between `u_q` and `u_{q+1}` made of two
//! `k x k` grids `v_q` and `w_q`; vertex `x^{i,j}` sits in column `i` and has
//! color `j`, the `u` vertices share color `k + 1`. A walk crosses a block
//! column by column, so with `r = k` the colors it picks in one block form a
//! permutation, and the windows spanning `u_{q+1}` force every block to use
//! the same one. Switching from `v_q` to `w_q` is only possible through a
//! cell of `F_q`, and `t` is only reachable from `w` grids.

use rand::Rng;

use crate::error::GeneratorError;
use crate::graph::{ColoredDigraph, Query, Vertex, Witness};

/// A family of subsets of `[1, k] x [1, k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhsInput {
    pub k: usize,
    pub sets: Vec<Vec<(usize, usize)>>,
}

impl PhsInput {
    pub fn new(k: usize, sets: Vec<Vec<(usize, usize)>>) -> Self {
        PhsInput { k, sets }
    }

    pub fn validate(&self) -> Result<(), GeneratorError> {
        if self.k == 0 {
            return Err(GeneratorError::Invalid("k must be at least 1".into()));
        }
        if self.sets.is_empty() {
            return Err(GeneratorError::Invalid("the set family is empty".into()));
        }
        for (q, f) in self.sets.iter().enumerate() {
            for &(i, j) in f {
                if i == 0 || j == 0 || i > self.k || j > self.k {
                    return Err(GeneratorError::Invalid(format!(
                        "set {} contains ({i},{j}) outside [1,{k}]^2",
                        q + 1,
                        k = self.k
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Vertex ids of a generated instance; all indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhsLayout {
    pub k: usize,
    pub m: usize,
}

impl PhsLayout {
    pub fn vertex_count(&self) -> usize {
        (self.m + 1) + 2 * self.k * self.k * self.m
    }

    pub fn u(&self, q: usize) -> Vertex {
        q - 1
    }

    fn base(&self, q: usize) -> Vertex {
        (self.m + 1) + (q - 1) * 2 * self.k * self.k
    }

    pub fn v(&self, q: usize, i: usize, j: usize) -> Vertex {
        self.base(q) + (i - 1) * self.k + (j - 1)
    }

    pub fn w(&self, q: usize, i: usize, j: usize) -> Vertex {
        self.base(q) + self.k * self.k + (i - 1) * self.k + (j - 1)
    }

    /// `(q, is_w, i, j)` of a grid vertex, `None` for the `u` vertices.
    pub fn locate(&self, x: Vertex) -> Option<(usize, bool, usize, usize)> {
        if x <= self.m || x >= self.vertex_count() {
            return None;
        }
        let off = x - (self.m + 1);
        let kk = self.k * self.k;
        let q = off / (2 * kk) + 1;
        let rest = off % (2 * kk);
        let is_w = rest >= kk;
        let cell = rest % kk;
        Some((q, is_w, cell / self.k + 1, cell % self.k + 1))
    }
}

/// Builds the instance with `r = k`, `ell = m (k + 1)` and `s = u_1`,
/// `t = u_{m+1}` (length at most `ell`).
pub fn gen_phs_instance(input: &PhsInput) -> Result<(ColoredDigraph, Query), GeneratorError> {
    input.validate()?;
    let k = input.k;
    let m = input.sets.len();
    let lay = PhsLayout { k, m };
    let n = lay.vertex_count();
    let mut colors = vec![0u64; n];
    for q in 1..=m + 1 {
        colors[lay.u(q)] = (k + 1) as u64;
    }
    let mut arcs = Vec::new();
    for (qi, f) in input.sets.iter().enumerate() {
        let q = qi + 1;
        for i in 1..=k {
            for j in 1..=k {
                colors[lay.v(q, i, j)] = j as u64;
                colors[lay.w(q, i, j)] = j as u64;
            }
        }
        for j in 1..=k {
            arcs.push((lay.u(q), lay.v(q, 1, j)));
            arcs.push((lay.w(q, k, j), lay.u(q + 1)));
        }
        for i in 1..k {
            for a in 1..=k {
                for b in 1..=k {
                    arcs.push((lay.v(q, i, a), lay.v(q, i + 1, b)));
                    arcs.push((lay.w(q, i, a), lay.w(q, i + 1, b)));
                }
            }
        }
        for &(i, j) in f {
            if i == 1 {
                arcs.push((lay.u(q), lay.w(q, 1, j)));
            } else {
                for a in 1..=k {
                    arcs.push((lay.v(q, i - 1, a), lay.w(q, i, j)));
                }
            }
        }
    }
    let g = ColoredDigraph::new(n, arcs, colors, lay.u(1), lay.u(m + 1))?;
    Ok((g, Query::at_most(k, m * (k + 1))))
}

/// The permutation a walk of a generated instance selects, if the walk
/// crosses every block column by column and picks the same bijection in
/// each block.
pub fn decode_permutation(lay: &PhsLayout, walk: &Witness) -> Option<Vec<usize>> {
    let verts = &walk.vertices;
    if verts.len() != lay.m * (lay.k + 1) + 1 {
        return None;
    }
    let mut phi: Option<Vec<usize>> = None;
    for q in 1..=lay.m {
        let start = (q - 1) * (lay.k + 1);
        if verts[start] != lay.u(q) {
            return None;
        }
        let mut block = Vec::with_capacity(lay.k);
        for i in 1..=lay.k {
            let (bq, _, ci, j) = lay.locate(verts[start + i])?;
            if bq != q || ci != i {
                return None;
            }
            block.push(j);
        }
        let mut sorted = block.clone();
        sorted.sort_unstable();
        if sorted != (1..=lay.k).collect::<Vec<_>>() {
            return None;
        }
        match &phi {
            Some(p) if *p != block => return None,
            _ => phi = Some(block),
        }
    }
    (verts.last() == Some(&lay.u(lay.m + 1))).then_some(phi?)
}

/// The walk selecting `phi` that switches grids at the first cell of each
/// set it hits; `None` if `phi` misses a set.
pub fn permutation_walk(input: &PhsInput, phi: &[usize]) -> Option<Witness> {
    let lay = PhsLayout {
        k: input.k,
        m: input.sets.len(),
    };
    let mut verts = Vec::new();
    for (qi, f) in input.sets.iter().enumerate() {
        let q = qi + 1;
        let switch = (1..=input.k).find(|&i| f.contains(&(i, phi[i - 1])))?;
        verts.push(lay.u(q));
        for i in 1..=input.k {
            let j = phi[i - 1];
            verts.push(if i < switch {
                lay.v(q, i, j)
            } else {
                lay.w(q, i, j)
            });
        }
    }
    verts.push(lay.u(lay.m + 1));
    Some(Witness::new(verts))
}

/// `m` random sets over `[1, k]^2`, each cell included with probability
/// `density` (and at least one cell per set).
pub fn random_phs_input(k: usize, m: usize, density: f64, rng: &mut impl Rng) -> PhsInput {
    let sets = (0..m)
        .map(|_| {
            let mut f: Vec<(usize, usize)> = Vec::new();
            for i in 1..=k {
                for j in 1..=k {
                    if rng.gen_bool(density) {
                        f.push((i, j));
                    }
                }
            }
            if f.is_empty() {
                f.push((rng.gen_range(1..=k), rng.gen_range(1..=k)));
            }
            f
        })
        .collect();
    PhsInput { k, sets }
}
